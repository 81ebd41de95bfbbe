#include "sspo/advantage.hpp"

#include <cmath>
#include <stdexcept>

namespace sspo {

AdvantageVector group_advantages(const Eigen::VectorXd& rewards) {
  if (rewards.size() < 2) {
    throw std::invalid_argument("group_advantages: need at least 2 rewards");
  }
  if (!rewards.allFinite()) {
    throw std::invalid_argument("group_advantages: non-finite reward");
  }

  const double mean = rewards.mean();
  const Eigen::VectorXd centered = rewards.array() - mean;
  const double variance =
      centered.squaredNorm() / static_cast<double>(rewards.size());
  const double std_dev = std::sqrt(variance);

  AdvantageVector adv;
  if (std_dev < 1e-12) {
    adv.degenerate = true;
    adv.values = Eigen::VectorXd::Zero(rewards.size());
  } else {
    adv.degenerate = false;
    adv.values = centered / std_dev;
  }
  return adv;
}

}  // namespace sspo
