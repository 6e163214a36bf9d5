#pragma once

#include <random>
#include <utility>

#include "uavaoi/nn/mlp.hpp"

namespace uavaoi::rl {

// Two independent Q(s, a) networks; input is [s; a].
struct TwinCritic {
  nn::Mlp q1;
  nn::Mlp q2;

  TwinCritic() = default;
  TwinCritic(int obs_dim, int action_dim, int hidden = 128);

  // Initializes each twin from its own draws.
  void init(std::mt19937_64& rng);

  int obs_dim() const { return obs_dim_; }
  int action_dim() const { return action_dim_; }

  static nn::Matrix join(const nn::Matrix& obs, const nn::Matrix& action);

 private:
  int obs_dim_ = 0;
  int action_dim_ = 0;
};

}  // namespace uavaoi::rl
