#include "sspo/objectives.hpp"

#include <cmath>
#include <stdexcept>

#include "sspo/numeric.hpp"

namespace sspo {

namespace {

void require_valid_inputs(const RolloutGroup& group, const AdvantageVector& adv,
                          const char* who) {
  ValidationResult validation = validate_group(group);
  if (!validation.ok()) {
    throw std::invalid_argument(std::string(who) + ": invalid group:\n" +
                                validation.to_string());
  }
  if (static_cast<std::size_t>(adv.values.size()) != group.responses.size()) {
    throw std::invalid_argument(std::string(who) +
                                ": advantage count does not match group size");
  }
}

void finalize(ObjectiveReport& report, const char* who) {
  report.clip_fraction =
      report.total_tokens == 0
          ? 0.0
          : static_cast<double>(report.clipped_tokens) /
                static_cast<double>(report.total_tokens);
  if (!std::isfinite(report.value)) {
    throw std::runtime_error(std::string(who) + ": non-finite objective value");
  }
}

}  // namespace

double segment_ratio(std::span<const double> log_ratios) {
  if (log_ratios.empty()) {
    throw std::invalid_argument("segment_ratio: empty segment");
  }
  for (double lr : log_ratios) {
    if (!std::isfinite(lr)) {
      throw std::invalid_argument("segment_ratio: non-finite log-ratio");
    }
  }
  return std::exp(ordered_mean(log_ratios));
}

double response_ratio(std::span<const double> log_ratios) {
  return segment_ratio(log_ratios);
}

ClippedTerm clipped_term(double ratio, double advantage,
                         const ClipBounds& bounds) {
  if (!bounds.valid()) {
    throw std::invalid_argument("clipped_term: bounds must satisfy 0 < low < high");
  }
  const double unclipped = ratio * advantage;
  const double clamped = clamp(ratio, bounds.low, bounds.high) * advantage;
  // The clamp branch is selected only when it is strictly smaller; an equal
  // value means clipping changed nothing and the gradient is unaffected.
  if (clamped < unclipped) return {clamped, true};
  return {unclipped, false};
}

ObjectiveReport grpo_objective(const RolloutGroup& group,
                               const AdvantageVector& adv, double eps) {
  const ClipBounds bounds = ClipBounds::symmetric(eps);
  if (!bounds.valid()) {
    throw std::invalid_argument("grpo_objective: eps must be in (0, 1)");
  }
  require_valid_inputs(group, adv, "grpo_objective");

  ObjectiveReport report;
  const std::size_t g = group.responses.size();
  double value = 0.0;
  for (std::size_t i = 0; i < g; ++i) {
    const Response& resp = group.responses[i];
    const double a = adv.values[static_cast<Eigen::Index>(i)];
    std::vector<double> terms;
    terms.reserve(resp.tokens.size());
    std::vector<bool> clipped(resp.tokens.size(), false);
    for (std::size_t t = 0; t < resp.tokens.size(); ++t) {
      const double ratio = std::exp(token_log_ratio(resp.tokens[t]));
      const ClippedTerm ct = clipped_term(ratio, a, bounds);
      terms.push_back(ct.value);
      clipped[t] = ct.clipped;
      if (ct.clipped) ++report.clipped_tokens;
    }
    report.total_tokens += resp.tokens.size();
    value += ordered_sum(terms) / static_cast<double>(resp.tokens.size());
    report.per_token_clipped.push_back(std::move(clipped));
  }
  report.value = value / static_cast<double>(g);
  finalize(report, "grpo_objective");
  return report;
}

ObjectiveReport gspo_objective(const RolloutGroup& group,
                               const AdvantageVector& adv,
                               const ClipBounds& bounds) {
  require_valid_inputs(group, adv, "gspo_objective");

  ObjectiveReport report;
  const std::size_t g = group.responses.size();
  double value = 0.0;
  for (std::size_t i = 0; i < g; ++i) {
    const Response& resp = group.responses[i];
    const Eigen::VectorXd lr = log_ratios(resp);
    const double s = response_ratio(
        {lr.data(), static_cast<std::size_t>(lr.size())});
    const ClippedTerm ct =
        clipped_term(s, adv.values[static_cast<Eigen::Index>(i)], bounds);
    value += ct.value;
    // The whole response shares one ratio, so a clipped term discards every
    // token of the response.
    report.per_token_clipped.emplace_back(resp.tokens.size(), ct.clipped);
    report.per_segment_ratios.push_back({s});
    report.total_tokens += resp.tokens.size();
    if (ct.clipped) report.clipped_tokens += resp.tokens.size();
  }
  report.value = value / static_cast<double>(g);
  finalize(report, "gspo_objective");
  return report;
}

ObjectiveReport sspo_objective(
    const RolloutGroup& group, const AdvantageVector& adv,
    const std::vector<std::vector<ClipBounds>>& bounds_per_segment) {
  require_valid_inputs(group, adv, "sspo_objective");
  if (bounds_per_segment.size() != group.responses.size()) {
    throw std::invalid_argument("sspo_objective: bounds count does not match group size");
  }

  ObjectiveReport report;
  const std::size_t g = group.responses.size();
  double value = 0.0;
  for (std::size_t i = 0; i < g; ++i) {
    const Response& resp = group.responses[i];
    if (!resp.segmentation) {
      throw std::invalid_argument("sspo_objective: response " +
                                  std::to_string(i) + " lacks a segmentation");
    }
    const Segmentation& seg = *resp.segmentation;
    if (bounds_per_segment[i].size() != seg.spans.size()) {
      throw std::invalid_argument("sspo_objective: response " +
                                  std::to_string(i) +
                                  " has a bounds count mismatch");
    }
    const Eigen::VectorXd lr = log_ratios(resp);
    const double a = adv.values[static_cast<Eigen::Index>(i)];

    std::vector<double> contributions;
    contributions.reserve(seg.spans.size());
    std::vector<double> ratios;
    ratios.reserve(seg.spans.size());
    std::vector<bool> clipped(resp.tokens.size(), false);
    for (std::size_t j = 0; j < seg.spans.size(); ++j) {
      const Span& span = seg.spans[j];
      const double s = segment_ratio({lr.data() + span.begin, span.length()});
      const ClippedTerm ct = clipped_term(s, a, bounds_per_segment[i][j]);
      contributions.push_back(static_cast<double>(span.length()) * ct.value);
      ratios.push_back(s);
      if (ct.clipped) {
        report.clipped_tokens += span.length();
        for (std::size_t t = span.begin; t < span.end; ++t) clipped[t] = true;
      }
    }
    report.total_tokens += resp.tokens.size();
    value +=
        ordered_sum(contributions) / static_cast<double>(resp.tokens.size());
    report.per_token_clipped.push_back(std::move(clipped));
    report.per_segment_ratios.push_back(std::move(ratios));
  }
  report.value = value / static_cast<double>(g);
  finalize(report, "sspo_objective");
  return report;
}

std::vector<ClipComparisonRow> clip_fraction_report(
    const std::vector<std::pair<std::string, ObjectiveReport>>& reports) {
  std::vector<ClipComparisonRow> rows;
  rows.reserve(reports.size());
  for (const auto& [name, report] : reports) {
    rows.push_back({name, report.clip_fraction, report.clipped_tokens,
                    report.total_tokens});
  }
  return rows;
}

const char* to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::grpo: return "grpo";
    case Algorithm::gspo: return "gspo";
    case Algorithm::sspo: return "sspo";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "grpo") return Algorithm::grpo;
  if (name == "gspo") return Algorithm::gspo;
  if (name == "sspo") return Algorithm::sspo;
  throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace sspo
