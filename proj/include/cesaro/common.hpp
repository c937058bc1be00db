// Shared vocabulary: index and scalar types, error classes, tri-state flags,
// growth verdicts and the finite-horizon decision rule.
#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace cesaro {

/// Sequence indices are 1-based throughout.
using Index = std::size_t;
using Complex = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition: bad argument, point on the forbidden set, data too short.
class DomainError : public Error {
 public:
  using Error::Error;
};

class MonotonicityError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

enum class TriState { unknown, yes, no };
std::string_view to_string(TriState t);

enum class Status { holds, fails, inconclusive };
std::string_view to_string(Status s);

struct DecisionRule {
  double divergence_threshold = 1e3;
  // Slack when comparing the last-decade maximum with the earlier maximum.
  double growth_tolerance = 1e-12;
};

struct GrowthVerdict {
  Status status = Status::inconclusive;
  Index horizon = 0;
  double sup_value = 0.0;
  double log_sup_value = -kInf;
  Index witness_index = 0;
  bool grew_last_decade = false;
  bool declared_override = false;
};

/// How scores fed to a ScanTracker relate to the quantity being bounded.
enum class Scale { plain, log };

/// Running supremum of a score sequence, split at `late_from` into an early
/// part and a last-decade part.
class ScanTracker {
 public:
  ScanTracker(double late_from, Scale scale);

  void add(double position, Index index, double score);

  bool empty() const { return !any_; }
  double sup_score() const { return sup_; }
  Index witness() const { return witness_; }
  bool grew(double tolerance) const;
  double sup_value() const;
  double log_sup() const;
  Scale scale() const { return scale_; }

 private:
  double late_from_;
  Scale scale_;
  double early_max_ = -kInf;
  double late_max_ = -kInf;
  double sup_ = -kInf;
  Index witness_ = 0;
  bool any_ = false;
};

/// Fills sup, witness and growth fields; status is left inconclusive.
GrowthVerdict make_verdict(const ScanTracker& scan, Index horizon, const DecisionRule& rule);

/// fails if the sup crosses the threshold while still growing, else inconclusive.
Status divergence_rule(const GrowthVerdict& v, const DecisionRule& rule);

/// holds if below threshold and not growing, fails if above and growing,
/// inconclusive otherwise.
Status boundedness_rule(const GrowthVerdict& v, const DecisionRule& rule);

/// Applies a declared flag: yes -> holds, no -> fails, unknown -> divergence_rule.
void apply_declared(GrowthVerdict& v, TriState declared, const DecisionRule& rule);

/// Round-trip decimal form with 17 significant digits ("inf", "-inf", "nan" for non-finite).
std::string fmt17(double x);

/// log(exp(a) + exp(b)) without overflow.
inline double log_add_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  if (a < b) std::swap(a, b);
  if (a == kInf) return kInf;
  return a + std::log1p(std::exp(b - a));
}

/// Runs body(i) for i in [0, count) on `threads` workers. Results must be
/// written to per-index slots so the outcome does not depend on scheduling.
template <class F>
void parallel_for(Index count, unsigned threads, F&& body) {
  if (threads <= 1 || count < 2) {
    for (Index i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<Index> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  unsigned n_workers = threads < count ? threads : static_cast<unsigned>(count);
  for (unsigned t = 0; t < n_workers; ++t) {
    pool.emplace_back([&] {
      for (Index i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cesaro
