#pragma once

// Reverse (denoising) chain that turns Gaussian noise into an action,
// conditioned on an observation. The chain is reparameterized: all randomness
// is drawn up front or from the caller's generator, so the sampled action is a
// differentiable function of the denoiser weights.

#include <random>
#include <vector>

#include "uavaoi/diffusion/denoiser.hpp"
#include "uavaoi/diffusion/schedule.hpp"

namespace uavaoi::diffusion {

struct SamplerOutput {
  nn::Matrix action;              // tanh(a_0), one column per observation
  std::vector<nn::Matrix> chain;  // a_K, ..., a_0 when requested
};

// mean = (a_k - beta_k / sqrt(1 - alpha_bar_k) * eps_hat) / sqrt(alpha_k);
// returns mean + sqrt(beta_k) * z, with z ignored at k = 1.
nn::Matrix reverse_update(const nn::Matrix& a_k, const nn::Matrix& eps_hat, int k,
                          const DiffusionSchedule& schedule, const nn::Matrix& z);

// One reverse step. Draws z from `rng` only when k > 1.
nn::Matrix denoise_step(const nn::Matrix& a_k, int k, const nn::Matrix& obs, const Denoiser& denoiser,
                        const DiffusionSchedule& schedule, std::mt19937_64& rng);

SamplerOutput sample_action(const nn::Matrix& obs, const Denoiser& denoiser, const DiffusionSchedule& schedule,
                            std::mt19937_64& rng, bool keep_chain = false);

// Forward record of a full chain for reverse-mode differentiation.
struct ChainTape {
  std::vector<nn::Tape> steps;  // steps[i] belongs to k = K - i
  nn::Matrix action;
};

nn::Matrix sample_action(const nn::Matrix& obs, const Denoiser& denoiser, const DiffusionSchedule& schedule,
                         std::mt19937_64& rng, ChainTape& tape);

// Given dL/d(action) accumulates dL/d(weights) into `param_grad` and returns dL/d(a_K).
nn::Matrix backward(const ChainTape& tape, const nn::Matrix& grad_action, const Denoiser& denoiser,
                    const DiffusionSchedule& schedule, nn::Vector& param_grad);

}  // namespace uavaoi::diffusion
