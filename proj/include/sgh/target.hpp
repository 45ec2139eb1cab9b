#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgh/signed_graph.hpp"

namespace sgh {

// ---------------------------------------------------------------------------
// Property P_{t-1}: for every j in 0..t-1, every j-tuple J of distinct
// vertices and every sign vector a of length j,
//     2 * |N^a(J)| >= 1 + (t - j)(t - 2).
// ---------------------------------------------------------------------------

struct PropertyWitness {
  std::vector<Vertex> tuple;
  std::vector<Sign> signs;

  friend bool operator==(const PropertyWitness&, const PropertyWitness&) = default;
};

struct PropertyReport {
  unsigned t = 0;
  bool passed = false;
  // Smallest violating (J, a) in the enumeration order: j ascending by
  // prefix, then vertex ids ascending, '+' before '-' at each position.
  std::optional<PropertyWitness> witness;
  // min over enumerated (J, a) of 2|N^a(J)| - (1 + (t-j)(t-2)). Exact when the
  // property holds or in full-margin mode; otherwise the witness's margin.
  std::int64_t min_margin = 0;
  // Number of (J, a) pairs examined.
  std::uint64_t checked = 0;
};

inline constexpr std::uint64_t kDefaultPropertyBudget = 1'000'000'000;

struct PropertyOptions {
  unsigned threads = 1;
  bool full_margin = false;
  std::uint64_t budget = kDefaultPropertyBudget;
};

// Doubled threshold 1 + (t - j)(t - 2).
std::int64_t property_threshold(unsigned t, unsigned j);

// Sum over j < t of C(n, j) * 2^j, saturating.
double property_work(std::size_t n, unsigned t);

// Requires t >= 2 and a complete signed graph. Throws Error(InvalidArgument)
// or Error(BudgetExceeded).
PropertyReport has_property_p(const SignedGraph& c, unsigned t, const PropertyOptions& opts = {});

// ---------------------------------------------------------------------------
// Randomised construction.
// ---------------------------------------------------------------------------

// t(t-1) * 2^t.
std::uint64_t default_target_order(unsigned t);

// Complete graph; edge signs i.i.d. uniform from a seeded mt19937_64, one
// draw per pair in (u, v) lexicographic order.
SignedGraph random_signed_complete(std::size_t n, std::uint64_t seed);

// Seed of the attempt with the given index under a master seed.
std::uint64_t attempt_seed(std::uint64_t master, std::uint64_t attempt);

struct TargetCertificate {
  unsigned t = 0;
  std::size_t order = 0;
  std::uint64_t seed = 0;
  std::uint64_t attempt_index = 0;
  std::uint64_t attempts = 0;
  std::string digest;

  friend bool operator==(const TargetCertificate&, const TargetCertificate&) = default;
};

struct ConstructedTarget {
  SignedGraph graph;
  TargetCertificate certificate;
};

inline constexpr std::uint64_t kDefaultMaxAttempts = 1000;

// Draws random complete graphs until one has property P_{t-1}. nullopt after
// max_attempts failures.
std::optional<ConstructedTarget> construct_target(unsigned t, std::optional<std::size_t> order,
                                                  std::uint64_t seed,
                                                  std::uint64_t max_attempts = kDefaultMaxAttempts,
                                                  const PropertyOptions& opts = {});

struct CertificateCheck {
  bool digest_matches = false;
  bool graph_matches = true;
  bool property_holds = false;

  bool ok() const noexcept { return digest_matches && graph_matches && property_holds; }
};

// Regenerates the certified graph from (order, seed, attempt_index) and
// re-verifies it. If `graph` is given it must equal the regenerated graph.
CertificateCheck verify_certificate(const TargetCertificate& cert,
                                    const SignedGraph* graph = nullptr,
                                    const PropertyOptions& opts = {});

struct MonteCarloResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;

  double rate() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

MonteCarloResult monte_carlo_property_rate(unsigned t, std::size_t n, std::uint64_t trials,
                                           std::uint64_t seed, const PropertyOptions& opts = {});

// ---------------------------------------------------------------------------
// Numeric bounds.
// ---------------------------------------------------------------------------

// Positive real held as its natural logarithm, so that values such as
// exp(-5e5) stay representable.
class LogReal {
 public:
  LogReal() = default;
  static LogReal from_ln(long double ln) { return LogReal(ln); }
  static LogReal from_value(long double v);

  long double ln() const noexcept { return ln_; }
  long double log10() const noexcept;
  // Value as a long double; 0 or inf outside its range.
  long double value() const noexcept;
  // "d.ddddde[+-]xx" with `digits` significant digits.
  std::string scientific(int digits = 12) const;
  bool below_one() const noexcept { return ln_ < 0.0L; }

  friend bool operator<(LogReal a, LogReal b) noexcept { return a.ln_ < b.ln_; }
  friend bool operator<=(LogReal a, LogReal b) noexcept { return a.ln_ <= b.ln_; }

 private:
  explicit LogReal(long double ln) : ln_(ln) {}
  long double ln_ = 0.0L;
};

// f(j) = 2 exp(-c 2^-j) c^(((t-j)(t-2)+1)/2 + j). Requires 0 <= j <= t-1, c >= 1.
LogReal bound_summand_f(unsigned j, unsigned t, std::uint64_t c);

// exp(c 2^-(j+1)) / c^((t-4)/2), the closed form of f(j+1)/f(j).
LogReal bound_summand_ratio(unsigned j, unsigned t, std::uint64_t c);

struct BadEventBound {
  std::vector<LogReal> summands;
  LogReal sum;
  // 2(1.001) (t^3 (t-1)^3 2^(3t) / e^(4t-2))^((t-1)/2)
  LogReal closed_form;
  bool below_one = false;
  // Every ratio f(j+1)/f(j) exceeds 2^10.
  bool ratio_condition = false;
};

BadEventBound bad_event_bound(unsigned t, std::uint64_t c);

struct ChromaticBounds {
  double lower = 0.0;
  std::uint64_t upper = 0;
};

// (2^(delta/2 - 1), (delta-1)^2 2^(delta-1) + 2). Requires delta >= 3.
ChromaticBounds chromatic_bounds(unsigned delta);

}  // namespace sgh
