#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sspo/segment.hpp"

namespace sspo {

/// One sampled token with its log-probability under the sampling (old)
/// policy and under the policy being optimized. Log-probs are natural logs
/// and therefore <= 0. old_entropy is the Shannon entropy of the full
/// next-token distribution under the old policy at this position; external
/// logs may omit it, in which case adaptive clipping is unavailable.
struct TokenRecord {
  int token_id = 0;
  double old_logp = 0.0;
  double new_logp = 0.0;
  std::optional<double> old_entropy;
};

struct Response {
  std::vector<TokenRecord> tokens;
  double reward = 0.0;
  std::optional<Segmentation> segmentation;

  std::size_t size() const { return tokens.size(); }
};

/// G responses sampled for one query under the old policy.
struct RolloutGroup {
  std::string query_id;
  std::vector<Response> responses;

  std::size_t size() const { return responses.size(); }
};

struct Violation {
  std::ptrdiff_t response_index = -1;  // -1: group-level violation
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// log w_{i,t} = new_logp - old_logp. Ratios are carried in log space until
/// the final exp so long-segment products cannot overflow.
/// Throws std::invalid_argument on non-finite input.
double token_log_ratio(const TokenRecord& token);

/// Per-token log-ratios of one response, in token order.
Eigen::VectorXd log_ratios(const Response& response);

/// Rewards of a group as a vector, in response order.
Eigen::VectorXd group_rewards(const RolloutGroup& group);

/// Checks every structural invariant (G >= 2, nonempty responses, finite
/// log-probs <= 0, nonnegative entropies, segmentation coverage) and reports
/// all violations with their response index. Never repairs anything.
ValidationResult validate_group(const RolloutGroup& group);

}  // namespace sspo
