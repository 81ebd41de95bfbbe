#pragma once

namespace sspo {

/// Absolute ratio bounds for the PPO-style clamp: ratios are clipped to
/// [low, high], not to offsets around 1. Requires 0 < low < high.
struct ClipBounds {
  double low = 0.8;
  double high = 1.2;

  bool valid() const { return 0.0 < low && low < high; }

  /// (1 - eps, 1 + eps), the classic symmetric clip window.
  static ClipBounds symmetric(double eps) { return {1.0 - eps, 1.0 + eps}; }

  /// Bounds so wide the clamp never binds; the clipped objective reduces
  /// to its unclipped form and every token keeps its gradient.
  static ClipBounds unbounded() { return {1e-300, 1e300}; }

  bool operator==(const ClipBounds&) const = default;
};

}  // namespace sspo
