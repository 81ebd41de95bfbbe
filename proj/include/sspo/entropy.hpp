#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "sspo/clip_bounds.hpp"
#include "sspo/rollout.hpp"

namespace sspo {

enum class ClipMode { adaptive, fixed };

/// Configuration of the clip-bound rule. In adaptive mode the bounds are a
/// function of segment entropy (see clip_bounds); in fixed mode the
/// configured constant window is returned for every segment.
struct EntropyConfig {
  double alpha = 0.2;  // eps_high = 1 + alpha + H
  ClipMode mode = ClipMode::adaptive;
  ClipBounds fixed = ClipBounds::symmetric(0.2);
};

/// Shannon entropy of a next-token distribution, in nats. 0*log(0) counts
/// as 0. Throws std::invalid_argument unless the entries are nonnegative
/// and sum to 1 within 1e-9.
double token_entropy(const Eigen::VectorXd& dist);

/// Mean token entropy over one segment.
/// Throws std::invalid_argument on an empty segment or negative entries.
double segment_entropy(const Eigen::VectorXd& token_entropies);

/// Entropy-adaptive clip window:
///   eps_high = 1 + alpha + H
///   eps_low  = 0.3 (H > 1) | 1.3 - H (0.5 <= H <= 1) | 0.8 (H < 0.5)
/// which pins eps_low to clamp(1.3 - H, 0.3, 0.8). High-entropy segments
/// get a wider window, low-entropy segments a narrower one. A ratio of 1
/// is never clipped since eps_low < 1 < eps_high.
ClipBounds clip_bounds(double segment_entropy_h, const EntropyConfig& cfg);

/// Per-segment bounds for every response of a group (responses must carry
/// segmentations). In adaptive mode each token needs old_entropy: a missing
/// entropy is a hard error, never a silent fixed-mode fallback.
std::vector<std::vector<ClipBounds>> group_clip_bounds(
    const RolloutGroup& group, const EntropyConfig& cfg);

/// Mean segment entropy over all segments of a group, for step metrics.
double mean_segment_entropy(const RolloutGroup& group);

const char* to_string(ClipMode mode);
ClipMode clip_mode_from_string(const std::string& name);

}  // namespace sspo
