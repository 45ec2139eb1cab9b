#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "sgh/error.hpp"
#include "sgh/target.hpp"

namespace sgh {
namespace {

struct BranchResult {
  bool violated = false;
  PropertyWitness witness;
  std::int64_t witness_margin = 0;
  std::int64_t min_margin = std::numeric_limits<std::int64_t>::max();
  std::uint64_t checked = 0;
};

// Depth-first walk over (J, a) with J strictly increasing. Pre-order visits
// pairs in the witness order documented on PropertyReport.
class BranchScanner {
 public:
  BranchScanner(const SignedGraph& c, unsigned t, bool full_margin,
                const std::atomic<std::size_t>& best_first)
      : c_(c), t_(t), full_(full_margin), best_first_(best_first),
        levels_(t, VertexSet(c.order())) {}

  BranchResult scan(Vertex first) {
    result_ = BranchResult{};
    first_ = first;
    tuple_.clear();
    signs_.clear();
    for (Sign s : {Sign::Positive, Sign::Negative}) {
      levels_[1] = c_.neighbors(first, s);
      tuple_.push_back(first);
      signs_.push_back(s);
      const bool stop = visit(1);
      tuple_.pop_back();
      signs_.pop_back();
      if (stop) break;
    }
    return std::move(result_);
  }

 private:
  // Returns true when the scan should stop.
  bool visit(unsigned depth) {
    const auto size = static_cast<std::int64_t>(levels_[depth].size());
    const std::int64_t margin = 2 * size - property_threshold(t_, depth);
    ++result_.checked;
    result_.min_margin = std::min(result_.min_margin, margin);
    if (margin < 0 && !result_.violated) {
      result_.violated = true;
      result_.witness = {tuple_, signs_};
      result_.witness_margin = margin;
      if (!full_) return true;
    }
    if (!full_ && best_first_.load(std::memory_order_relaxed) < first_) return true;
    if (depth + 1 >= t_) return false;
    const Vertex n = static_cast<Vertex>(c_.order());
    for (Vertex v = tuple_.back() + 1; v < n; ++v) {
      for (Sign s : {Sign::Positive, Sign::Negative}) {
        levels_[depth + 1] = levels_[depth];
        levels_[depth + 1] &= c_.neighbors(v, s);
        tuple_.push_back(v);
        signs_.push_back(s);
        const bool stop = visit(depth + 1);
        tuple_.pop_back();
        signs_.pop_back();
        if (stop) return true;
      }
    }
    return false;
  }

  const SignedGraph& c_;
  unsigned t_;
  bool full_;
  const std::atomic<std::size_t>& best_first_;
  Vertex first_ = 0;
  std::vector<VertexSet> levels_;
  std::vector<Vertex> tuple_;
  std::vector<Sign> signs_;
  BranchResult result_;
};

}  // namespace

std::int64_t property_threshold(unsigned t, unsigned j) {
  return 1 + (static_cast<std::int64_t>(t) - j) * (static_cast<std::int64_t>(t) - 2);
}

double property_work(std::size_t n, unsigned t) {
  double total = 0.0;
  double term = 1.0;  // C(n, j) * 2^j
  for (unsigned j = 0; j < t; ++j) {
    total += term;
    if (j + 1 > n) break;
    term = term * static_cast<double>(n - j) / static_cast<double>(j + 1) * 2.0;
  }
  return total;
}

PropertyReport has_property_p(const SignedGraph& c, unsigned t, const PropertyOptions& opts) {
  if (t < 2) fail(ErrorCode::InvalidArgument, "property P_{t-1} needs t >= 2, got " + std::to_string(t));
  if (!c.is_complete()) fail(ErrorCode::InvalidArgument, "property check needs a complete signed graph");
  const double work = property_work(c.order(), t);
  if (work > static_cast<double>(opts.budget)) {
    fail(ErrorCode::BudgetExceeded, "property check at order " + std::to_string(c.order()) +
                                        " and t=" + std::to_string(t) + " needs " +
                                        std::to_string(work) + " intersections, budget is " +
                                        std::to_string(opts.budget));
  }

  PropertyReport report;
  report.t = t;
  const std::size_t n = c.order();
  const std::int64_t root_margin = 2 * static_cast<std::int64_t>(n) - property_threshold(t, 0);
  report.checked = 1;
  report.min_margin = root_margin;
  if (root_margin < 0) {
    report.witness = PropertyWitness{};
    if (!opts.full_margin) return report;
  }
  if (t == 1 || n == 0) {
    report.passed = !report.witness;
    return report;
  }

  std::vector<BranchResult> branches(n);
  std::atomic<std::size_t> best_first{n};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    BranchScanner scanner(c, t, opts.full_margin, best_first);
    while (true) {
      const std::size_t v = next.fetch_add(1);
      if (v >= n) return;
      if (!opts.full_margin && v > best_first.load()) continue;
      branches[v] = scanner.scan(static_cast<Vertex>(v));
      if (branches[v].violated) {
        std::size_t cur = best_first.load();
        while (v < cur && !best_first.compare_exchange_weak(cur, v)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Branches past the first violating one may be partial or skipped in
  // early-exit mode; only the prefix up to it is deterministic.
  const std::size_t stop = opts.full_margin ? n : std::min(n, best_first.load() + 1);
  for (std::size_t v = 0; v < stop; ++v) {
    const auto& b = branches[v];
    report.checked += b.checked;
    report.min_margin = std::min(report.min_margin, b.min_margin);
    if (b.violated && !report.witness) report.witness = b.witness;
  }
  if (!opts.full_margin && report.witness) report.min_margin = branches[stop - 1].witness_margin;
  report.passed = !report.witness;
  return report;
}

}  // namespace sgh
