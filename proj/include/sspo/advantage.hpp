#pragma once

#include <Eigen/Core>

namespace sspo {

/// Group-standardized advantages. When the reward spread is zero the group
/// carries no learning signal: the degenerate flag is set and every value
/// is 0, which makes the gradient contribution of the group exactly zero.
struct AdvantageVector {
  Eigen::VectorXd values;
  bool degenerate = false;
};

/// values[i] = (r_i - mean) / std with the population (divide-by-G)
/// standard deviation. std below 1e-12 marks the group degenerate.
/// Throws std::invalid_argument for G < 2 or non-finite rewards.
AdvantageVector group_advantages(const Eigen::VectorXd& rewards);

}  // namespace sspo
