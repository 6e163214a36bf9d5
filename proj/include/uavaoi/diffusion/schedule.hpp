#pragma once

#include <string>
#include <vector>

#include "uavaoi/nn/mlp.hpp"

namespace uavaoi::diffusion {

enum class BetaSchedule { linear, cosine };

std::string to_string(BetaSchedule s);
BetaSchedule beta_schedule_from_string(const std::string& name);

// Variance schedule over K steps. Vectors are 0-based storage for 1-based step k,
// so beta(k) == betas[k - 1].
struct DiffusionSchedule {
  BetaSchedule kind = BetaSchedule::linear;
  double beta_min = 1e-4;
  double beta_max = 0.2;
  std::vector<double> betas;
  std::vector<double> alphas;
  std::vector<double> alpha_bars;

  int steps() const { return static_cast<int>(betas.size()); }
  double beta(int k) const { return betas.at(k - 1); }
  double alpha(int k) const { return alphas.at(k - 1); }
  double alpha_bar(int k) const { return alpha_bars.at(k - 1); }
};

// Linearly spaced betas from beta_min to beta_max (beta_min alone when K = 1).
DiffusionSchedule make_schedule(int steps, double beta_min, double beta_max);

// Cosine alpha_bar profile with betas clipped into [beta_min, beta_max].
DiffusionSchedule make_cosine_schedule(int steps, double beta_min, double beta_max);

DiffusionSchedule make_schedule(BetaSchedule kind, int steps, double beta_min, double beta_max);

// a_k = sqrt(alpha_bar(k)) a0 + sqrt(1 - alpha_bar(k)) noise
nn::Matrix forward_noise(const nn::Matrix& a0, int k, const DiffusionSchedule& schedule,
                         const nn::Matrix& noise);

}  // namespace uavaoi::diffusion
