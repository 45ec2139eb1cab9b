#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>

#include "sgh/error.hpp"
#include "sgh/target.hpp"

namespace sgh {
namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;
constexpr long double kLn10 = 2.302585092994045684017991454684364208L;

void check_summand_args(unsigned j, unsigned t, std::uint64_t c) {
  if (t < 1 || j > t - 1) {
    fail(ErrorCode::InvalidArgument, "summand index j=" + std::to_string(j) +
                                         " outside 0..t-1 for t=" + std::to_string(t));
  }
  if (c < 1) fail(ErrorCode::InvalidArgument, "order c must be positive");
}

}  // namespace

LogReal LogReal::from_value(long double v) {
  if (!(v > 0.0L)) fail(ErrorCode::InvalidArgument, "LogReal holds positive values only");
  return LogReal(std::log(v));
}

long double LogReal::log10() const noexcept { return ln_ / kLn10; }

long double LogReal::value() const noexcept { return std::exp(ln_); }

std::string LogReal::scientific(int digits) const {
  const long double l10 = log10();
  long double exponent = std::floor(l10);
  long double mantissa = std::pow(10.0L, l10 - exponent);
  std::ostringstream probe;
  probe << std::fixed << std::setprecision(digits - 1) << mantissa;
  if (probe.str().rfind("10", 0) == 0) {
    mantissa /= 10.0L;
    exponent += 1.0L;
  }
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits - 1) << mantissa << 'e'
      << (exponent < 0 ? '-' : '+') << std::setw(2) << std::setfill('0')
      << static_cast<long long>(std::fabs(exponent));
  return out.str();
}

LogReal bound_summand_f(unsigned j, unsigned t, std::uint64_t c) {
  check_summand_args(j, t, c);
  const auto cc = static_cast<long double>(c);
  const long double exponent =
      (static_cast<long double>(t - j) * (static_cast<long double>(t) - 2.0L) + 1.0L) / 2.0L + j;
  return LogReal::from_ln(kLn2 - std::ldexp(cc, -static_cast<int>(j)) + exponent * std::log(cc));
}

LogReal bound_summand_ratio(unsigned j, unsigned t, std::uint64_t c) {
  if (t < 2) fail(ErrorCode::InvalidArgument, "ratio needs t >= 2");
  check_summand_args(j, t - 1, c);
  const auto cc = static_cast<long double>(c);
  return LogReal::from_ln(std::ldexp(cc, -static_cast<int>(j) - 1) -
                          (static_cast<long double>(t) - 4.0L) / 2.0L * std::log(cc));
}

BadEventBound bad_event_bound(unsigned t, std::uint64_t c) {
  if (t < 2) fail(ErrorCode::InvalidArgument, "bad_event_bound needs t >= 2");
  BadEventBound out;
  long double peak = -INFINITY;
  for (unsigned j = 0; j < t; ++j) {
    out.summands.push_back(bound_summand_f(j, t, c));
    peak = std::max(peak, out.summands.back().ln());
  }
  // Neumaier-compensated sum of exp(ln f(j) - peak).
  long double sum = 0.0L;
  long double carry = 0.0L;
  for (const auto& f : out.summands) {
    const long double x = std::exp(f.ln() - peak);
    const long double next = sum + x;
    carry += std::fabs(sum) >= std::fabs(x) ? (sum - next) + x : (x - next) + sum;
    sum = next;
  }
  out.sum = LogReal::from_ln(peak + std::log(sum + carry));

  const auto tt = static_cast<long double>(t);
  const long double inner = 3.0L * std::log(tt) + 3.0L * std::log(tt - 1.0L) + 3.0L * tt * kLn2 -
                            (4.0L * tt - 2.0L);
  out.closed_form = LogReal::from_ln(std::log(2.002L) + (tt - 1.0L) / 2.0L * inner);
  out.below_one = out.sum.below_one();

  out.ratio_condition = true;
  for (unsigned j = 0; j + 1 < t; ++j) {
    if (!(bound_summand_ratio(j, t, c).ln() > 10.0L * kLn2)) out.ratio_condition = false;
  }
  return out;
}

ChromaticBounds chromatic_bounds(unsigned delta) {
  if (delta < 3) fail(ErrorCode::InvalidArgument, "chromatic bounds need delta >= 3, got " + std::to_string(delta));
  if (delta > 50) fail(ErrorCode::InvalidArgument, "upper bound overflows 64 bits for delta=" + std::to_string(delta));
  const std::uint64_t d1 = delta - 1;
  return {std::exp2(static_cast<double>(delta) / 2.0 - 1.0), d1 * d1 * (std::uint64_t{1} << d1) + 2};
}

}  // namespace sgh
