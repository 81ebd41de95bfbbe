#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace sspo {

/// Kahan compensated accumulator. Used for per-token reductions once a
/// response exceeds kCompensationThreshold tokens; plain summation below
/// that keeps short reductions bit-identical across the objective variants.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline constexpr std::size_t kCompensationThreshold = 10000;

/// Sum in index order; compensated only past the threshold.
inline double ordered_sum(std::span<const double> xs) {
  if (xs.size() > kCompensationThreshold) {
    KahanSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
  }
  double acc = 0.0;
  for (double x : xs) acc += x;
  return acc;
}

inline double ordered_mean(std::span<const double> xs) {
  return ordered_sum(xs) / static_cast<double>(xs.size());
}

inline double clamp(double x, double lo, double hi) {
  return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace sspo
