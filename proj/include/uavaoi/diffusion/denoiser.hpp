#pragma once

#include <random>

#include "uavaoi/nn/mlp.hpp"

namespace uavaoi::diffusion {

// Fixed sinusoidal features of the step index: half sines, half cosines over
// geometrically spaced frequencies.
nn::Vector step_embedding(int k, int dim);

// Noise-prediction network eps(a_k, k, s). Input is the concatenation
// [a_k; embed(k); s]; two mish hidden layers; tanh output of action size.
class Denoiser {
 public:
  static constexpr int kDefaultHidden = 128;
  static constexpr int kDefaultEmbedding = 16;

  Denoiser() = default;
  Denoiser(int action_dim, int obs_dim, int hidden = kDefaultHidden, int embed_dim = kDefaultEmbedding);

  void init(std::mt19937_64& rng) { net_.init(rng); }

  int action_dim() const { return action_dim_; }
  int obs_dim() const { return obs_dim_; }
  int hidden() const { return hidden_; }
  int embed_dim() const { return embed_dim_; }

  nn::Mlp& net() { return net_; }
  const nn::Mlp& net() const { return net_; }

  nn::Matrix predict(const nn::Matrix& a_k, int k, const nn::Matrix& obs) const;
  nn::Matrix predict(const nn::Matrix& a_k, int k, const nn::Matrix& obs, nn::Tape& tape) const;

  // Returns dL/d(a_k); parameter gradient accumulated into `param_grad` if non-null.
  nn::Matrix backward(const nn::Tape& tape, const nn::Matrix& grad_eps, nn::Vector* param_grad) const;

 private:
  nn::Matrix assemble(const nn::Matrix& a_k, int k, const nn::Matrix& obs) const;

  int action_dim_ = 0;
  int obs_dim_ = 0;
  int hidden_ = kDefaultHidden;
  int embed_dim_ = kDefaultEmbedding;
  nn::Mlp net_;
};

}  // namespace uavaoi::diffusion
