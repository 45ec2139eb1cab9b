#include "sgh/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "sgh/error.hpp"

namespace sgh {
namespace {

constexpr std::size_t kMaxOrder = std::size_t{1} << 22;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_ws = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_ws(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_ws(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class Int>
bool parse_uint(std::string_view tok, Int& out) {
  if (tok.empty() || tok.front() == '-' || tok.front() == '+') return false;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

// Calls f(line_number, tokens) for every non-blank, non-comment line.
template <class F>
void for_each_record(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    f(line_no, tokens);
    if (end == text.size()) break;
  }
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

std::optional<Sign> parse_sign(std::string_view tok) {
  if (tok == "+") return Sign::Positive;
  if (tok == "-" || tok == "\xE2\x88\x92") return Sign::Negative;
  return std::nullopt;
}

}  // namespace

SignedGraph parse_signed_graph(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<SignedEdge> edges;
  std::unordered_set<std::uint64_t> seen;
  for_each_record(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (!have_header) {
      if (tok.size() != 3 || tok[0] != "sg" || !parse_uint(tok[1], n) || !parse_uint(tok[2], m)) {
        parse_error(line, "malformed header, expected 'sg <n> <m>'");
      }
      if (n > kMaxOrder) parse_error(line, "malformed header, order " + std::to_string(n) + " too large");
      if (m > n * (n == 0 ? 0 : n - 1) / 2) {
        parse_error(line, "malformed header, " + std::to_string(m) + " edges exceed a simple graph on " +
                              std::to_string(n) + " vertices");
      }
      have_header = true;
      edges.reserve(m);
      return;
    }
    if (tok.size() != 3) parse_error(line, "malformed edge record, expected '<u> <v> <+|->'");
    Vertex u = 0;
    Vertex v = 0;
    if (!parse_uint(tok[0], u) || !parse_uint(tok[1], v)) {
      parse_error(line, "malformed edge record, endpoints must be non-negative integers");
    }
    if (u >= n || v >= n) {
      parse_error(line, "vertex " + std::to_string(std::max(u, v)) + " out of range for order " +
                            std::to_string(n));
    }
    if (u == v) parse_error(line, "loop at vertex " + std::to_string(u));
    const auto sign = parse_sign(tok[2]);
    if (!sign) parse_error(line, "sign token '" + std::string(tok[2]) + "' is not + or -");
    const auto [a, b] = std::minmax(u, v);
    if (!seen.insert((std::uint64_t{a} << 32) | b).second) {
      parse_error(line, "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    if (edges.size() == m) {
      parse_error(line, "edge count mismatch, header declares " + std::to_string(m) + " edges");
    }
    edges.push_back({a, b, *sign});
  });
  if (!have_header) fail(ErrorCode::Parse, "missing 'sg <n> <m>' header");
  if (edges.size() != m) {
    fail(ErrorCode::Parse, "edge count mismatch, header declares " + std::to_string(m) +
                               " edges but " + std::to_string(edges.size()) + " were given");
  }
  return SignedGraph(n, edges);
}

std::string emit_signed_graph(const SignedGraph& g) {
  std::string out = "sg " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += sign_char(e.sign);
    out += '\n';
  }
  return out;
}

std::string graph_digest(const SignedGraph& g) {
  const std::string text = emit_signed_graph(g);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 15];
  }
  return hex;
}

std::string emit_hom(const SignedHom& hom, bool verified) {
  std::string out;
  for (std::size_t v = 0; v < hom.map.size(); ++v) {
    out += std::to_string(v) + " -> " + std::to_string(hom.map[v]) +
           (hom.switches.contains(static_cast<Vertex>(v)) ? " switched\n" : " unswitched\n");
  }
  out += verified ? "verified yes\n" : "verified no\n";
  return out;
}

SignedHom parse_hom(std::string_view text) {
  std::map<Vertex, std::pair<Vertex, bool>> rows;
  for_each_record(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (tok[0] == "verified") return;
    Vertex v = 0;
    Vertex x = 0;
    if (tok.size() != 4 || tok[1] != "->" || !parse_uint(tok[0], v) || !parse_uint(tok[2], x) ||
        (tok[3] != "switched" && tok[3] != "unswitched")) {
      parse_error(line, "malformed mapping, expected '<v> -> <image> switched|unswitched'");
    }
    if (v >= kMaxOrder) parse_error(line, "source vertex " + std::to_string(v) + " too large");
    if (!rows.emplace(v, std::pair{x, tok[3] == "switched"}).second) {
      parse_error(line, "vertex " + std::to_string(v) + " mapped twice");
    }
  });
  SignedHom hom{std::vector<Vertex>(rows.size()), SwitchSet(rows.size())};
  Vertex expect = 0;
  for (const auto& [v, row] : rows) {
    if (v != expect) fail(ErrorCode::Parse, "vertex " + std::to_string(expect) + " has no image");
    hom.map[v] = row.first;
    if (row.second) hom.switches.insert(v);
    ++expect;
  }
  return hom;
}

std::string emit_certificate(const TargetCertificate& cert) {
  std::ostringstream out;
  out << "sgcert 1\n"
      << "t " << cert.t << "\n"
      << "order " << cert.order << "\n"
      << "seed " << cert.seed << "\n"
      << "attempt_index " << cert.attempt_index << "\n"
      << "attempts " << cert.attempts << "\n"
      << "digest " << cert.digest << "\n";
  return out.str();
}

TargetCertificate parse_certificate(std::string_view text) {
  TargetCertificate cert;
  bool have_header = false;
  std::map<std::string, std::string, std::less<>> fields;
  for_each_record(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (!have_header) {
      if (tok.size() != 2 || tok[0] != "sgcert" || tok[1] != "1") {
        parse_error(line, "malformed certificate header, expected 'sgcert 1'");
      }
      have_header = true;
      return;
    }
    if (tok.size() != 2) parse_error(line, "malformed certificate field, expected '<key> <value>'");
    static const std::unordered_set<std::string_view> kKeys = {"t", "order", "seed", "attempt_index",
                                                               "attempts", "digest"};
    if (!kKeys.contains(tok[0])) parse_error(line, "unknown certificate field '" + std::string(tok[0]) + "'");
    if (!fields.emplace(std::string(tok[0]), std::string(tok[1])).second) {
      parse_error(line, "certificate field '" + std::string(tok[0]) + "' repeated");
    }
  });
  if (!have_header) fail(ErrorCode::Parse, "missing 'sgcert 1' header");
  auto get = [&](std::string_view key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) fail(ErrorCode::Parse, "certificate field '" + std::string(key) + "' missing");
    return it->second;
  };
  auto number = [&](std::string_view key, auto& out) {
    if (!parse_uint(get(key), out)) fail(ErrorCode::Parse, "certificate field '" + std::string(key) + "' is not a number");
  };
  number("t", cert.t);
  number("order", cert.order);
  number("seed", cert.seed);
  number("attempt_index", cert.attempt_index);
  number("attempts", cert.attempts);
  cert.digest = get("digest");
  if (cert.digest.size() != 64 ||
      cert.digest.find_first_not_of("0123456789abcdef") != std::string::npos) {
    fail(ErrorCode::Parse, "certificate digest is not 64 lowercase hex digits");
  }
  if (cert.order > kMaxOrder) fail(ErrorCode::Parse, "certificate order too large");
  return cert;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "error reading '" + path.string() + "'");
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) fail(ErrorCode::Io, "error writing '" + path.string() + "'");
}

}  // namespace sgh
