// Command-line front end over the C API.
//
// Exit codes: 0 success / true / exists, 1 false / not found / property
// fails, 2 usage or I/O error.

#include <cstdio>
#include <fstream>
#include <iterator>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgh/sgh.h"

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct GraphFree {
  void operator()(sgh_graph* g) const { sgh_graph_free(g); }
};
struct HomFree {
  void operator()(sgh_hom* h) const { sgh_hom_free(h); }
};
struct CertFree {
  void operator()(sgh_cert* c) const { sgh_cert_free(c); }
};
struct StringFree {
  void operator()(char* s) const { sgh_string_free(s); }
};

using Graph = std::unique_ptr<sgh_graph, GraphFree>;
using Hom = std::unique_ptr<sgh_hom, HomFree>;
using Cert = std::unique_ptr<sgh_cert, CertFree>;
using CString = std::unique_ptr<char, StringFree>;

// Thrown to unwind with an exit code after the message has been printed.
struct Exit {
  int code;
};

int exit_code(sgh_status s) {
  switch (s) {
    case SGH_OK: return kExitYes;
    case SGH_NOT_FOUND:
    case SGH_ERR_EMBED_STUCK: return kExitNo;
    default: return kExitError;
  }
}

// Errors abort; SGH_OK and SGH_NOT_FOUND are returned to the caller.
sgh_status check(sgh_status s) {
  if (s == SGH_OK || s == SGH_NOT_FOUND) return s;
  std::cerr << "error: " << sgh_status_name(s) << ": " << sgh_last_error() << "\n";
  throw Exit{exit_code(s)};
}

Graph load_graph(const std::string& path) {
  sgh_graph* g = nullptr;
  check(sgh_graph_load(path.c_str(), &g));
  return Graph(g);
}

Cert load_cert(const std::string& path) {
  sgh_cert* c = nullptr;
  check(sgh_cert_load(path.c_str(), &c));
  return Cert(c);
}

std::string take(char* s) {
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string graph_text(const sgh_graph* g) {
  char* s = nullptr;
  check(sgh_graph_emit(g, &s));
  return take(s);
}

std::string hom_text(const sgh_hom* h, bool verified) {
  char* s = nullptr;
  check(sgh_hom_emit(h, verified ? 1 : 0, &s));
  return take(s);
}

std::string cert_text(const sgh_cert* c) {
  char* s = nullptr;
  check(sgh_cert_emit(c, &s));
  return take(s);
}

void write_text(const std::string& path, const std::string& text) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (f == nullptr || std::fwrite(text.data(), 1, text.size(), f) != text.size()) {
    if (f != nullptr) std::fclose(f);
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Exit{kExitError};
  }
  std::fclose(f);
}

// Writes to `path` if given, otherwise to stdout.
void deliver(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

bool verify_hom(const sgh_graph* g, const sgh_graph* h, const sgh_hom* hom) {
  int valid = 0;
  check(sgh_check_signed_hom(g, h, hom, &valid));
  return valid != 0;
}

std::string sign_text(int s) { return s > 0 ? "+" : "-"; }

void print_stats(const sgh_embed_stats& st) {
  std::cout << "mode " << (st.regular_fix ? "regular-fix" : "greedy") << "\n";
  if (st.regular_fix) std::cout << "removed_edge " << st.removed_u << " " << st.removed_v << "\n";
  std::cout << "placements " << st.placements << "\n"
            << "backtracks " << st.backtracks << "\n"
            << "guard_violations " << st.guard_violations << "\n"
            << "min_slack " << st.min_slack << "\n";
}

struct PropertyFlags {
  unsigned threads = 1;
  bool full = false;

  sgh_property_options options() const { return {threads, full ? 1 : 0, 0}; }
};

void add_threads(CLI::App* cmd, PropertyFlags& flags) {
  cmd->add_option("--threads", flags.threads, "worker threads for property verification")
      ->check(CLI::Range(1U, 256U));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed graph homomorphisms, property-P targets and bounded-degree embeddings"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int result = kExitYes;

  // gen-target
  auto* gen = app.add_subcommand("gen-target", "construct a complete target with property P_{t-1}");
  unsigned gen_t = 0;
  std::size_t gen_order = 0;
  std::uint64_t gen_seed = 1;
  std::uint64_t gen_attempts = 1000;
  std::string gen_out;
  std::string gen_cert;
  PropertyFlags gen_flags;
  gen->add_option("--t", gen_t, "t (target has property P_{t-1})")->required();
  gen->add_option("--order", gen_order, "target order (default t(t-1)2^t)");
  gen->add_option("--seed", gen_seed, "master seed")->capture_default_str();
  gen->add_option("--max-attempts", gen_attempts, "attempt cap")->capture_default_str();
  gen->add_option("-o,--output", gen_out, "target graph file")->required();
  gen->add_option("--cert", gen_cert, "certificate file");
  add_threads(gen, gen_flags);
  gen->callback([&] {
    sgh_graph* g = nullptr;
    sgh_cert* c = nullptr;
    const auto opts = gen_flags.options();
    const sgh_status s = check(sgh_construct_target(gen_t, gen_order, gen_seed, gen_attempts, &opts, &g, &c));
    if (s == SGH_NOT_FOUND) {
      std::cout << "seed " << gen_seed << "\n" << "failed after " << gen_attempts << " attempts\n";
      result = kExitNo;
      return;
    }
    Graph graph(g);
    Cert cert(c);
    const std::string text = cert_text(cert.get());
    write_text(gen_out, graph_text(graph.get()));
    if (!gen_cert.empty()) write_text(gen_cert, text);
    std::cout << text;
  });

  // verify-property
  auto* vp = app.add_subcommand("verify-property", "check property P_{t-1} of a complete signed graph");
  unsigned vp_t = 0;
  std::string vp_file;
  PropertyFlags vp_flags;
  vp->add_option("--t", vp_t, "t")->required();
  vp->add_option("file", vp_file, "signed graph file")->required();
  vp->add_flag("--full", vp_flags.full, "scan every pair for the exact minimum margin");
  add_threads(vp, vp_flags);
  vp->callback([&] {
    Graph g = load_graph(vp_file);
    sgh_property_report r{};
    const auto opts = vp_flags.options();
    const sgh_status s = check(sgh_has_property(g.get(), vp_t, &opts, &r));
    std::cout << "t " << r.t << "\n"
              << "order " << sgh_graph_order(g.get()) << "\n"
              << "passed " << (r.passed ? "yes" : "no") << "\n"
              << "min_margin " << r.min_margin << "\n"
              << "checked " << r.checked << "\n";
    if (r.has_witness) {
      std::string tuple;
      std::string signs;
      for (std::size_t i = 0; i < r.witness_length; ++i) {
        tuple += (i ? "," : "") + std::to_string(r.witness_vertices[i]);
        signs += (i ? "," : "") + sign_text(r.witness_signs[i]);
      }
      std::cout << "witness J=(" << tuple << ") a=(" << signs << ")\n";
    }
    result = exit_code(s);
  });

  // verify-cert
  auto* vc = app.add_subcommand("verify-cert", "re-derive and re-verify a target certificate");
  std::string vc_cert;
  std::string vc_graph;
  PropertyFlags vc_flags;
  vc->add_option("cert", vc_cert, "certificate file")->required();
  vc->add_option("--graph", vc_graph, "target graph file that must match the certificate");
  add_threads(vc, vc_flags);
  vc->callback([&] {
    Cert cert = load_cert(vc_cert);
    Graph g = vc_graph.empty() ? Graph() : load_graph(vc_graph);
    const auto opts = vc_flags.options();
    const sgh_status s = check(sgh_cert_verify(cert.get(), g.get(), &opts));
    std::cout << "certificate " << (s == SGH_OK ? "valid" : "invalid") << "\n";
    if (s != SGH_OK) std::cout << "reason " << sgh_last_error() << "\n";
    result = exit_code(s);
  });

  // hom
  auto* hom = app.add_subcommand("hom", "search for a signed homomorphism G -> H");
  std::string hom_g;
  std::string hom_h;
  std::string hom_out;
  hom->add_option("G", hom_g, "source graph")->required();
  hom->add_option("H", hom_h, "target graph")->required();
  hom->add_option("-o,--output", hom_out, "write the homomorphism here");
  hom->callback([&] {
    Graph g = load_graph(hom_g);
    Graph h = load_graph(hom_h);
    sgh_hom* raw = nullptr;
    if (check(sgh_find_signed_hom(g.get(), h.get(), &raw)) == SGH_NOT_FOUND) {
      std::cout << "no signed homomorphism\n";
      result = kExitNo;
      return;
    }
    Hom found(raw);
    deliver(hom_out, hom_text(found.get(), verify_hom(g.get(), h.get(), found.get())));
  });

  // verify-hom
  auto* vh = app.add_subcommand("verify-hom", "check a homomorphism file against G and H");
  std::string vh_g;
  std::string vh_h;
  std::string vh_hom;
  vh->add_option("G", vh_g, "source graph")->required();
  vh->add_option("H", vh_h, "target graph")->required();
  vh->add_option("hom", vh_hom, "homomorphism file")->required();
  vh->callback([&] {
    Graph g = load_graph(vh_g);
    Graph h = load_graph(vh_h);
    std::ifstream in(vh_hom, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot open '" << vh_hom << "'\n";
      throw Exit{kExitError};
    }
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    sgh_hom* raw = nullptr;
    check(sgh_hom_parse(text.c_str(), &raw));
    Hom parsed(raw);
    const bool ok = verify_hom(g.get(), h.get(), parsed.get());
    std::cout << "valid " << (ok ? "yes" : "no") << "\n";
    result = ok ? kExitYes : kExitNo;
  });

  // switch-equiv
  auto* se = app.add_subcommand("switch-equiv", "decide whether B is a re-signing of A");
  std::string se_a;
  std::string se_b;
  se->add_option("A", se_a, "first graph")->required();
  se->add_option("B", se_b, "second graph")->required();
  se->callback([&] {
    Graph a = load_graph(se_a);
    Graph b = load_graph(se_b);
    std::vector<unsigned char> bits(sgh_graph_order(a.get()), 0);
    const sgh_status s = check(sgh_switching_equivalent(a.get(), b.get(), bits.data()));
    std::cout << "equivalent " << (s == SGH_OK ? "yes" : "no") << "\n";
    if (s == SGH_OK) {
      std::cout << "switch_set";
      for (std::size_t v = 0; v < bits.size(); ++v) {
        if (bits[v]) std::cout << " " << v;
      }
      std::cout << "\n";
    }
    result = exit_code(s);
  });

  // chi-s / chi-2
  auto add_chromatic = [&](const char* name, const char* label, sgh_chromatic_kind kind,
                           const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    auto file = std::make_shared<std::string>();
    auto max_order = std::make_shared<std::size_t>(0);
    cmd->add_option("G", *file, "signed graph")->required();
    cmd->add_option("--max-order", *max_order, "give up above this order (default: n)");
    cmd->callback([&, file, max_order, kind, label] {
      Graph g = load_graph(*file);
      std::size_t value = 0;
      sgh_graph* target = nullptr;
      sgh_hom* witness = nullptr;
      if (check(sgh_chromatic_number(g.get(), kind, *max_order, &value, &target, &witness)) ==
          SGH_NOT_FOUND) {
        std::cout << label << " > " << (*max_order == 0 ? sgh_graph_order(g.get()) : *max_order) << "\n";
        result = kExitNo;
        return;
      }
      Graph t(target);
      Hom w(witness);
      std::cout << label << " " << value << "\n"
                << "# target\n" << graph_text(t.get())
                << "# homomorphism\n" << hom_text(w.get(), verify_hom(g.get(), t.get(), w.get()));
    });
  };
  add_chromatic("chi-s", "chi_s", SGH_CHI_SIGNED, "exact signed chromatic number");
  add_chromatic("chi-2", "chi_2", SGH_CHI_2EC, "exact 2-edge-colored chromatic number");

  // embed
  auto* emb = app.add_subcommand("embed", "embed G into a certified target");
  std::string emb_g;
  std::string emb_target;
  unsigned emb_t = 0;
  std::string emb_out;
  std::string emb_aug;
  emb->add_option("G", emb_g, "source graph")->required();
  emb->add_option("--target", emb_target, "complete target graph with property P_{t-1}")->required();
  emb->add_option("--t", emb_t, "t")->required();
  emb->add_option("-o,--output", emb_out, "write the homomorphism here");
  emb->add_option("--augmented-out", emb_aug, "write the augmented target (regular inputs)");
  emb->callback([&] {
    Graph g = load_graph(emb_g);
    Graph c = load_graph(emb_target);
    sgh_graph_stats gs{};
    check(sgh_graph_get_stats(g.get(), &gs));
    sgh_embed_stats st{};
    sgh_hom* raw = nullptr;
    Graph target;
    if (gs.is_regular && gs.max_degree == emb_t && gs.max_degree > 0) {
      sgh_graph* aug = nullptr;
      if (check(sgh_embed_regular_fix(g.get(), c.get(), emb_t, &raw, &aug, &st)) != SGH_OK) {
        result = kExitNo;
        return;
      }
      target.reset(aug);
      if (!emb_aug.empty()) write_text(emb_aug, graph_text(target.get()));
    } else {
      if (check(sgh_greedy_embed(g.get(), c.get(), emb_t, &raw, &st)) != SGH_OK) {
        result = kExitNo;
        return;
      }
    }
    Hom h(raw);
    const sgh_graph* against = target ? target.get() : c.get();
    print_stats(st);
    std::cout << "target_order " << sgh_graph_order(against) << "\n";
    const std::string text = hom_text(h.get(), verify_hom(g.get(), against, h.get()));
    if (emb_out.empty()) {
      std::cout << text;
    } else {
      write_text(emb_out, text);
    }
  });

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "certify a target for t = max degree and embed G");
  std::string pipe_g;
  std::uint64_t pipe_seed = 1;
  std::string pipe_target_out;
  std::string pipe_cert_out;
  std::string pipe_hom_out;
  PropertyFlags pipe_flags;
  pipe->add_option("G", pipe_g, "connected source graph with max degree >= 3")->required();
  pipe->add_option("--seed", pipe_seed, "master seed for the target")->capture_default_str();
  pipe->add_option("--target-out", pipe_target_out, "write the (augmented) target here");
  pipe->add_option("--cert-out", pipe_cert_out, "write the target certificate here");
  pipe->add_option("--hom-out", pipe_hom_out, "write the homomorphism here");
  add_threads(pipe, pipe_flags);
  pipe->callback([&] {
    Graph g = load_graph(pipe_g);
    const auto opts = pipe_flags.options();
    sgh_hom* raw = nullptr;
    sgh_graph* tg = nullptr;
    sgh_cert* cc = nullptr;
    sgh_embed_stats st{};
    if (check(sgh_pipeline(g.get(), pipe_seed, &opts, nullptr, nullptr, &raw, &tg, &cc, &st)) != SGH_OK) {
      std::cout << "seed " << pipe_seed << "\n" << "pipeline failed: " << sgh_last_error() << "\n";
      result = kExitNo;
      return;
    }
    Hom h(raw);
    Graph target(tg);
    Cert cert(cc);
    const std::string ctext = cert_text(cert.get());
    std::cout << ctext;
    print_stats(st);
    std::cout << "target_order " << sgh_graph_order(target.get()) << "\n";
    if (!pipe_target_out.empty()) write_text(pipe_target_out, graph_text(target.get()));
    if (!pipe_cert_out.empty()) write_text(pipe_cert_out, ctext);
    deliver(pipe_hom_out, hom_text(h.get(), verify_hom(g.get(), target.get(), h.get())));
  });

  // bounds
  auto* bnd = app.add_subcommand("bounds", "lower and upper bounds on chi_s for max degree delta");
  unsigned bnd_delta = 0;
  bnd->add_option("--delta", bnd_delta, "maximum degree")->required();
  bnd->callback([&] {
    double lower = 0;
    std::uint64_t upper = 0;
    check(sgh_chromatic_bounds(bnd_delta, &lower, &upper));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", lower);
    std::cout << "delta " << bnd_delta << "\n" << "lower " << buf << "\n" << "upper " << upper << "\n";
  });

  // prob-bound
  auto* pb = app.add_subcommand("prob-bound", "evaluate the bad-event probability bound");
  unsigned pb_t = 0;
  std::uint64_t pb_order = 0;
  pb->add_option("--t", pb_t, "t")->required();
  pb->add_option("--order", pb_order, "order c (default t(t-1)2^t)");
  pb->callback([&] {
    std::uint64_t c = pb_order;
    if (c == 0) check(sgh_default_target_order(pb_t, &c));
    char* text = nullptr;
    check(sgh_bad_event_bound_report(pb_t, c, &text));
    std::cout << take(text);
    sgh_bad_event_bound b{};
    check(sgh_bad_event_bound_eval(pb_t, c, &b));
    result = b.below_one ? kExitYes : kExitNo;
  });

  // mc-rate
  auto* mc = app.add_subcommand("mc-rate", "fraction of random complete graphs with property P_{t-1}");
  unsigned mc_t = 0;
  std::size_t mc_order = 0;
  std::uint64_t mc_trials = 0;
  std::uint64_t mc_seed = 1;
  PropertyFlags mc_flags;
  mc->add_option("--t", mc_t, "t")->required();
  mc->add_option("--order", mc_order, "order of the random graphs")->required();
  mc->add_option("--trials", mc_trials, "number of trials")->required();
  mc->add_option("--seed", mc_seed, "master seed")->capture_default_str();
  add_threads(mc, mc_flags);
  mc->callback([&] {
    std::uint64_t successes = 0;
    const auto opts = mc_flags.options();
    check(sgh_monte_carlo_rate(mc_t, mc_order, mc_trials, mc_seed, &opts, &successes));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(successes) / static_cast<double>(mc_trials));
    std::cout << "t " << mc_t << "\n" << "order " << mc_order << "\n" << "trials " << mc_trials << "\n"
              << "seed " << mc_seed << "\n" << "successes " << successes << "\n" << "rate " << buf << "\n";
  });

  // random-graph
  auto* rg = app.add_subcommand("random-graph", "random connected signed graph of bounded degree");
  std::size_t rg_n = 0;
  std::size_t rg_delta = 0;
  bool rg_regular = false;
  double rg_neg = 0.5;
  std::uint64_t rg_seed = 1;
  std::string rg_out;
  rg->add_option("--n", rg_n, "vertices")->required();
  rg->add_option("--delta", rg_delta, "maximum degree")->required();
  rg->add_flag("--regular", rg_regular, "exactly delta-regular");
  rg->add_option("--neg-prob", rg_neg, "probability that an edge is negative")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  rg->add_option("--seed", rg_seed, "seed")->capture_default_str();
  rg->add_option("-o,--output", rg_out, "write the graph here");
  rg->callback([&] {
    sgh_graph* raw = nullptr;
    check(sgh_random_bounded_degree_graph(rg_n, rg_delta, rg_regular ? 1 : 0, rg_neg, rg_seed, &raw));
    Graph g(raw);
    deliver(rg_out, "# random-graph n=" + std::to_string(rg_n) + " delta=" + std::to_string(rg_delta) +
                        (rg_regular ? " regular" : "") + " seed=" + std::to_string(rg_seed) + "\n" +
                        graph_text(g.get()));
  });

  // random-complete
  auto* rc = app.add_subcommand("random-complete", "complete graph with uniformly random signs");
  std::size_t rc_n = 0;
  std::uint64_t rc_seed = 1;
  std::string rc_out;
  rc->add_option("--n", rc_n, "vertices")->required();
  rc->add_option("--seed", rc_seed, "seed")->capture_default_str();
  rc->add_option("-o,--output", rc_out, "write the graph here");
  rc->callback([&] {
    sgh_graph* raw = nullptr;
    check(sgh_random_signed_complete(rc_n, rc_seed, &raw));
    Graph g(raw);
    deliver(rc_out, "# random-complete n=" + std::to_string(rc_n) + " seed=" + std::to_string(rc_seed) +
                        "\n" + graph_text(g.get()));
  });

  // stats
  auto* stc = app.add_subcommand("stats", "degree, regularity, connectivity and degeneracy");
  std::string st_file;
  stc->add_option("G", st_file, "signed graph")->required();
  stc->callback([&] {
    Graph g = load_graph(st_file);
    sgh_graph_stats s{};
    check(sgh_graph_get_stats(g.get(), &s));
    std::cout << "order " << sgh_graph_order(g.get()) << "\n"
              << "edges " << sgh_graph_edge_count(g.get()) << "\n"
              << "max_degree " << s.max_degree << "\n"
              << "regular " << (s.is_regular ? "yes" : "no") << "\n"
              << "connected " << (s.is_connected ? "yes" : "no") << "\n"
              << "degeneracy " << s.degeneracy << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitYes : kExitError;
  } catch (const Exit& e) {
    return e.code;
  }
  return result;
}
