#pragma once

#include <memory>
#include <random>
#include <string>

#include "uavaoi/diffusion/denoiser.hpp"
#include "uavaoi/diffusion/sampler.hpp"
#include "uavaoi/diffusion/schedule.hpp"
#include "uavaoi/nn/mlp.hpp"

namespace uavaoi::rl {

enum class ActorKind { mlp, diffusion };

std::string to_string(ActorKind kind);
ActorKind actor_kind_from_string(const std::string& name);

// Policy network shared by TD3 (deterministic MLP) and DTD3 (diffusion sampler).
// Parameters are one flat vector so target copies and optimizers stay generic.
class Actor {
 public:
  virtual ~Actor() = default;

  virtual ActorKind kind() const = 0;
  virtual int obs_dim() const = 0;
  virtual int action_dim() const = 0;
  virtual std::unique_ptr<Actor> clone() const = 0;
  virtual void init(std::mt19937_64& rng) = 0;

  virtual nn::Vector& params() = 0;
  virtual const nn::Vector& params() const = 0;

  // Actions in [-1, 1] for a batch of observations. `rng` feeds stochastic actors.
  virtual nn::Matrix act(const nn::Matrix& obs, std::mt19937_64& rng) const = 0;

  // Recorded forward pass; the matching backward accumulates dL/d(params).
  virtual nn::Matrix forward_train(const nn::Matrix& obs, std::mt19937_64& rng) = 0;
  virtual void backward_train(const nn::Matrix& grad_action, nn::Vector& param_grad) const = 0;
};

// obs -> hidden -> hidden -> action, tanh output.
class MlpActor final : public Actor {
 public:
  MlpActor(int obs_dim, int action_dim, int hidden = 128, nn::Activation activation = nn::Activation::mish);

  void init(std::mt19937_64& rng) override { net_.init(rng); }

  ActorKind kind() const override { return ActorKind::mlp; }
  int obs_dim() const override { return net_.input_dim(); }
  int action_dim() const override { return net_.output_dim(); }
  int hidden() const { return net_.sizes()[1]; }
  nn::Activation activation() const { return net_.hidden_activation(); }
  std::unique_ptr<Actor> clone() const override { return std::make_unique<MlpActor>(*this); }

  nn::Vector& params() override { return net_.params(); }
  const nn::Vector& params() const override { return net_.params(); }

  nn::Matrix act(const nn::Matrix& obs, std::mt19937_64& rng) const override;
  nn::Matrix forward_train(const nn::Matrix& obs, std::mt19937_64& rng) override;
  void backward_train(const nn::Matrix& grad_action, nn::Vector& param_grad) const override;

 private:
  nn::Mlp net_;
  nn::Tape tape_;
};

class DiffusionActor final : public Actor {
 public:
  DiffusionActor(int obs_dim, int action_dim, diffusion::DiffusionSchedule schedule, int hidden = 128,
                 int embed_dim = diffusion::Denoiser::kDefaultEmbedding);

  void init(std::mt19937_64& rng) override { denoiser_.init(rng); }

  ActorKind kind() const override { return ActorKind::diffusion; }
  int obs_dim() const override { return denoiser_.obs_dim(); }
  int action_dim() const override { return denoiser_.action_dim(); }
  std::unique_ptr<Actor> clone() const override { return std::make_unique<DiffusionActor>(*this); }

  const diffusion::DiffusionSchedule& schedule() const { return schedule_; }
  const diffusion::Denoiser& denoiser() const { return denoiser_; }

  nn::Vector& params() override { return denoiser_.net().params(); }
  const nn::Vector& params() const override { return denoiser_.net().params(); }

  nn::Matrix act(const nn::Matrix& obs, std::mt19937_64& rng) const override;
  nn::Matrix forward_train(const nn::Matrix& obs, std::mt19937_64& rng) override;
  void backward_train(const nn::Matrix& grad_action, nn::Vector& param_grad) const override;

 private:
  diffusion::DiffusionSchedule schedule_;
  diffusion::Denoiser denoiser_;
  diffusion::ChainTape tape_;
};

}  // namespace uavaoi::rl
