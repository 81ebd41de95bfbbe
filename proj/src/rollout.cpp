#include "sspo/rollout.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sspo {

std::string ValidationResult::to_string() const {
  std::ostringstream os;
  for (const Violation& v : violations) {
    if (v.response_index >= 0) os << "response " << v.response_index << ": ";
    os << v.message << "\n";
  }
  return os.str();
}

double token_log_ratio(const TokenRecord& token) {
  if (!std::isfinite(token.old_logp) || !std::isfinite(token.new_logp)) {
    throw std::invalid_argument("token_log_ratio: non-finite log-probability");
  }
  return token.new_logp - token.old_logp;
}

Eigen::VectorXd log_ratios(const Response& response) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(response.tokens.size()));
  for (Eigen::Index t = 0; t < out.size(); ++t) {
    out[t] = token_log_ratio(response.tokens[static_cast<std::size_t>(t)]);
  }
  return out;
}

Eigen::VectorXd group_rewards(const RolloutGroup& group) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(group.responses.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out[i] = group.responses[static_cast<std::size_t>(i)].reward;
  }
  return out;
}

ValidationResult validate_group(const RolloutGroup& group) {
  ValidationResult result;
  auto flag = [&](std::ptrdiff_t index, std::string message) {
    result.violations.push_back({index, std::move(message)});
  };

  if (group.responses.size() < 2) {
    flag(-1, "group size below 2 (got " +
                 std::to_string(group.responses.size()) + ")");
  }

  for (std::size_t i = 0; i < group.responses.size(); ++i) {
    const Response& resp = group.responses[i];
    const auto idx = static_cast<std::ptrdiff_t>(i);
    if (resp.tokens.empty()) {
      flag(idx, "response has no tokens");
      continue;
    }
    if (!std::isfinite(resp.reward)) {
      flag(idx, "non-finite reward");
    }
    for (std::size_t t = 0; t < resp.tokens.size(); ++t) {
      const TokenRecord& tok = resp.tokens[t];
      if (!std::isfinite(tok.old_logp) || tok.old_logp > 0.0) {
        flag(idx, "token " + std::to_string(t) +
                      ": old_logp must be finite and <= 0");
      }
      if (!std::isfinite(tok.new_logp) || tok.new_logp > 0.0) {
        flag(idx, "token " + std::to_string(t) +
                      ": new_logp must be finite and <= 0");
      }
      if (tok.old_entropy &&
          (!std::isfinite(*tok.old_entropy) || *tok.old_entropy < 0.0)) {
        flag(idx, "token " + std::to_string(t) +
                      ": old_entropy must be finite and >= 0");
      }
    }
    if (resp.segmentation &&
        !is_valid_partition(*resp.segmentation, resp.tokens.size())) {
      flag(idx, "segmentation does not cover response");
    }
  }
  return result;
}

}  // namespace sspo
