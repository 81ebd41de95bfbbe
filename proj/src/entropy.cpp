#include "sspo/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "sspo/numeric.hpp"

namespace sspo {

double token_entropy(const Eigen::VectorXd& dist) {
  if (dist.size() == 0) {
    throw std::invalid_argument("token_entropy: empty distribution");
  }
  double sum = 0.0;
  double h = 0.0;
  for (Eigen::Index v = 0; v < dist.size(); ++v) {
    const double p = dist[v];
    if (!std::isfinite(p) || p < 0.0) {
      throw std::invalid_argument("token_entropy: negative or non-finite entry");
    }
    sum += p;
    if (p > 0.0) h -= p * std::log(p);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("token_entropy: distribution sums to " +
                                std::to_string(sum) + ", not 1");
  }
  return h;
}

double segment_entropy(const Eigen::VectorXd& token_entropies) {
  if (token_entropies.size() == 0) {
    throw std::invalid_argument("segment_entropy: empty segment");
  }
  for (Eigen::Index t = 0; t < token_entropies.size(); ++t) {
    if (!std::isfinite(token_entropies[t]) || token_entropies[t] < 0.0) {
      throw std::invalid_argument(
          "segment_entropy: entropies must be finite and >= 0");
    }
  }
  return ordered_mean({token_entropies.data(),
                       static_cast<std::size_t>(token_entropies.size())});
}

ClipBounds clip_bounds(double segment_entropy_h, const EntropyConfig& cfg) {
  if (cfg.mode == ClipMode::fixed) return cfg.fixed;
  if (!(segment_entropy_h >= 0.0)) {
    throw std::invalid_argument("clip_bounds: segment entropy must be >= 0");
  }
  if (cfg.alpha < 0.0) {
    throw std::invalid_argument("clip_bounds: alpha must be >= 0");
  }
  const double h = segment_entropy_h;
  double low;
  if (h > 1.0) {
    low = 0.3;
  } else if (h >= 0.5) {
    low = 1.3 - h;
  } else {
    low = 0.8;
  }
  return {low, 1.0 + cfg.alpha + h};
}

namespace {

double span_entropy(const Response& resp, const Span& span) {
  Eigen::VectorXd hs(static_cast<Eigen::Index>(span.length()));
  for (std::size_t t = span.begin; t < span.end; ++t) {
    const auto& h = resp.tokens[t].old_entropy;
    if (!h) {
      throw std::invalid_argument(
          "adaptive clipping requires old_entropy on every token; token " +
          std::to_string(t) + " has none");
    }
    hs[static_cast<Eigen::Index>(t - span.begin)] = *h;
  }
  return segment_entropy(hs);
}

}  // namespace

std::vector<std::vector<ClipBounds>> group_clip_bounds(
    const RolloutGroup& group, const EntropyConfig& cfg) {
  std::vector<std::vector<ClipBounds>> bounds;
  bounds.reserve(group.responses.size());
  for (const Response& resp : group.responses) {
    if (!resp.segmentation) {
      throw std::invalid_argument("group_clip_bounds: response lacks a segmentation");
    }
    std::vector<ClipBounds> per_segment;
    per_segment.reserve(resp.segmentation->spans.size());
    for (const Span& span : resp.segmentation->spans) {
      per_segment.push_back(cfg.mode == ClipMode::fixed
                                ? cfg.fixed
                                : clip_bounds(span_entropy(resp, span), cfg));
    }
    bounds.push_back(std::move(per_segment));
  }
  return bounds;
}

double mean_segment_entropy(const RolloutGroup& group) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const Response& resp : group.responses) {
    if (!resp.segmentation) continue;
    for (const Span& span : resp.segmentation->spans) {
      sum += span_entropy(resp, span);
      ++count;
    }
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

const char* to_string(ClipMode mode) {
  return mode == ClipMode::adaptive ? "adaptive" : "fixed";
}

ClipMode clip_mode_from_string(const std::string& name) {
  if (name == "adaptive") return ClipMode::adaptive;
  if (name == "fixed") return ClipMode::fixed;
  throw std::invalid_argument("unknown clip mode: " + name);
}

}  // namespace sspo
