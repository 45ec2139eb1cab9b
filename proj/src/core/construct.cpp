#include <algorithm>
#include <atomic>
#include <random>
#include <string>
#include <thread>

#include "sgh/error.hpp"
#include "sgh/io.hpp"
#include "sgh/target.hpp"

namespace sgh {

std::uint64_t default_target_order(unsigned t) {
  if (t < 2) fail(ErrorCode::InvalidArgument, "default_target_order needs t >= 2, got " + std::to_string(t));
  if (t > 57) fail(ErrorCode::InvalidArgument, "default_target_order overflows 64 bits for t=" + std::to_string(t));
  return static_cast<std::uint64_t>(t) * (t - 1) * (std::uint64_t{1} << t);
}

SignedGraph random_signed_complete(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SignedEdge> edges;
  edges.reserve(n * (n == 0 ? 0 : n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      edges.push_back({u, v, (rng() >> 63) != 0 ? Sign::Negative : Sign::Positive});
    }
  }
  return SignedGraph(n, edges);
}

std::uint64_t attempt_seed(std::uint64_t master, std::uint64_t attempt) {
  // splitmix64 finaliser over the attempt-offset master seed.
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (attempt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::optional<ConstructedTarget> construct_target(unsigned t, std::optional<std::size_t> order,
                                                  std::uint64_t seed, std::uint64_t max_attempts,
                                                  const PropertyOptions& opts) {
  const std::size_t n = order.value_or(default_target_order(t));
  if (t < 2) fail(ErrorCode::InvalidArgument, "construct_target needs t >= 2");
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    SignedGraph candidate = random_signed_complete(n, attempt_seed(seed, attempt));
    if (!has_property_p(candidate, t, opts).passed) continue;
    TargetCertificate cert{t, n, seed, attempt, attempt + 1, graph_digest(candidate)};
    return ConstructedTarget{std::move(candidate), std::move(cert)};
  }
  return std::nullopt;
}

CertificateCheck verify_certificate(const TargetCertificate& cert, const SignedGraph* graph,
                                    const PropertyOptions& opts) {
  CertificateCheck check;
  const SignedGraph regenerated =
      random_signed_complete(cert.order, attempt_seed(cert.seed, cert.attempt_index));
  check.digest_matches = graph_digest(regenerated) == cert.digest;
  if (graph != nullptr) check.graph_matches = *graph == regenerated;
  check.property_holds = has_property_p(regenerated, cert.t, opts).passed;
  return check;
}

MonteCarloResult monte_carlo_property_rate(unsigned t, std::size_t n, std::uint64_t trials,
                                           std::uint64_t seed, const PropertyOptions& opts) {
  if (trials < 1) fail(ErrorCode::InvalidArgument, "monte carlo needs at least one trial");
  if (property_work(n, t) > static_cast<double>(opts.budget)) {
    fail(ErrorCode::BudgetExceeded, "property check at order " + std::to_string(n) +
                                        " exceeds the enumeration budget");
  }
  PropertyOptions per_trial = opts;
  per_trial.threads = 1;
  std::vector<char> passed(trials, 0);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= trials) return;
      passed[i] = has_property_p(random_signed_complete(n, attempt_seed(seed, i)), t, per_trial).passed;
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(opts.threads, trials)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  MonteCarloResult out;
  out.trials = trials;
  out.successes = static_cast<std::uint64_t>(std::count(passed.begin(), passed.end(), 1));
  return out;
}

}  // namespace sgh
