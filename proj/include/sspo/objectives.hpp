#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sspo/advantage.hpp"
#include "sspo/clip_bounds.hpp"
#include "sspo/rollout.hpp"

namespace sspo {

enum class Algorithm { grpo, gspo, sspo };

/// Result of evaluating one surrogate objective on one group.
///
/// per_token_clipped marks every token whose contribution was altered by the
/// clamp: the single token for GRPO, all tokens of the response for GSPO,
/// all tokens of the segment for SSPO. That granularity difference is the
/// data-utilization story the clip_fraction diagnostics exist to expose.
struct ObjectiveReport {
  double value = 0.0;
  std::vector<std::vector<bool>> per_token_clipped;    // [response][token]
  std::vector<std::vector<double>> per_segment_ratios; // sspo: [resp][seg], gspo: [resp][0]
  std::size_t clipped_tokens = 0;
  std::size_t total_tokens = 0;
  double clip_fraction = 0.0;
};

/// Geometric-mean importance ratio of one segment:
/// exp(mean of per-token log-ratios). Throws on an empty segment.
double segment_ratio(std::span<const double> log_ratios);

/// Same ratio over the whole response (the sequence-level ratio).
double response_ratio(std::span<const double> log_ratios);

/// PPO-clip term min(ratio*adv, clamp(ratio, low, high)*adv).
/// clipped is true only when the clamp changed the selected value, i.e.
/// exactly when the token loses its gradient.
struct ClippedTerm {
  double value = 0.0;
  bool clipped = false;
};
ClippedTerm clipped_term(double ratio, double advantage,
                         const ClipBounds& bounds);

/// Token-level ratios, symmetric window (1 - eps, 1 + eps):
/// value = (1/G) sum_i (1/|y_i|) sum_t min(w_it * A_i, clamp(w_it) * A_i).
ObjectiveReport grpo_objective(const RolloutGroup& group,
                               const AdvantageVector& adv, double eps);

/// One sequence-level ratio per response, one clipped term per response.
/// A clipped response loses all of its tokens at once.
ObjectiveReport gspo_objective(const RolloutGroup& group,
                               const AdvantageVector& adv,
                               const ClipBounds& bounds);

/// Segment-level ratios with per-segment bounds:
/// value = (1/G) sum_i (1/|y_i|) sum_j |y_ij| * min(s_ij * A_i, clamp(s_ij) * A_i).
/// Every response must carry a segmentation and bounds_per_segment must
/// supply one ClipBounds per segment.
ObjectiveReport sspo_objective(
    const RolloutGroup& group, const AdvantageVector& adv,
    const std::vector<std::vector<ClipBounds>>& bounds_per_segment);

struct ClipComparisonRow {
  std::string algorithm;
  double clip_fraction = 0.0;
  std::size_t clipped_tokens = 0;
  std::size_t total_tokens = 0;
};

/// Tabulates clip fractions of several reports computed on the same group.
std::vector<ClipComparisonRow> clip_fraction_report(
    const std::vector<std::pair<std::string, ObjectiveReport>>& reports);

const char* to_string(Algorithm alg);
Algorithm algorithm_from_string(const std::string& name);

}  // namespace sspo
