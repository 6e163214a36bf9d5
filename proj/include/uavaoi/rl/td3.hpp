#pragma once

// Twin-delayed actor-critic training. The actor is pluggable: an MLP gives
// plain TD3, a diffusion sampler gives DTD3; everything else is shared.

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "uavaoi/diffusion/schedule.hpp"
#include "uavaoi/env/environment.hpp"
#include "uavaoi/nn/adam.hpp"
#include "uavaoi/rl/actor.hpp"
#include "uavaoi/rl/critic.hpp"
#include "uavaoi/rl/replay_buffer.hpp"

namespace uavaoi::rl {

struct TrainerConfig {
  std::size_t batch_size = 128;
  std::size_t buffer_capacity = ReplayBuffer::kDefaultCapacity;
  double actor_lr = 3e-4;
  double critic_lr = 3e-4;
  double gamma = 0.99;
  double rho = 0.005;  // soft target update rate
  int policy_delay = 2;
  double target_noise_std = 0.2;
  double target_noise_clip = 0.5;
  double explore_std = 0.1;
  std::int64_t total_env_steps = 300'000;
  std::int64_t warmup_steps = 5'000;
  std::int64_t eval_interval = 0;  // env steps between greedy evaluations; 0 disables
  int eval_episodes = 1;
  std::uint64_t seed = 0;
  int hidden = 128;
  nn::Activation actor_activation = nn::Activation::mish;
  int diffusion_steps = 5;
  double beta_min = 1e-4;
  double beta_max = 0.2;
  diffusion::BetaSchedule beta_schedule = diffusion::BetaSchedule::linear;
  int embed_dim = 16;
  // Store done = 1 at the slot limit. Off: horizon truncation still bootstraps.
  bool terminal_on_episode_end = false;
  // Redraw device positions every episode instead of once per run.
  bool randomize_layout = false;

  bool operator==(const TrainerConfig&) const = default;
};

void validate(const TrainerConfig& config);

std::unique_ptr<Actor> make_actor(ActorKind kind, int obs_dim, int action_dim, const TrainerConfig& config);

struct TargetValues {
  nn::Vector y;
  nn::Vector q1;  // Q1'(s', a~)
  nn::Vector q2;  // Q2'(s', a~)
  nn::Matrix next_action;
};

// a~ = clamp(target_actor(s') + clip(N(0, std), +-clip), [-1, 1]);
// y = r + gamma (1 - done) min(Q1', Q2').
TargetValues critic_target(const Batch& batch, const Actor& target_actor, const TwinCritic& target_critics,
                           const TrainerConfig& config, std::mt19937_64& rng);

// Same bootstrap for a given smoothed next action, with optional twin masking
// (use_q1 / use_q2) so single-twin targets can be compared against the min.
TargetValues critic_target_for_action(const Batch& batch, const nn::Matrix& next_action,
                                      const TwinCritic& target_critics, double gamma, bool use_q1 = true,
                                      bool use_q2 = true);

// One Adam step on each twin's MSE to y. Returns the summed loss measured before the step.
double critic_update(TwinCritic& critics, nn::Adam& opt1, nn::Adam& opt2, const Batch& batch, const nn::Vector& y,
                     std::int64_t step = -1);

// One Adam step on -mean Q1(s, actor(s)) w.r.t. actor parameters only.
double actor_update(Actor& actor, nn::Adam& opt, const nn::Mlp& critic1, const Batch& batch, std::mt19937_64& rng,
                    std::int64_t step = -1);

// Same objective against an arbitrary differentiable critic given as
// (obs, action) -> (Q, dQ/da).
using CriticFn = std::function<std::pair<nn::Vector, nn::Matrix>(const nn::Matrix&, const nn::Matrix&)>;
double actor_update(Actor& actor, nn::Adam& opt, const CriticFn& critic, const nn::Matrix& obs,
                    std::mt19937_64& rng, std::int64_t step = -1);

inline bool actor_update_due(std::int64_t critic_updates, int policy_delay) {
  return critic_updates > 0 && critic_updates % policy_delay == 0;
}

struct UpdateStats {
  double critic_loss = 0.0;
  double actor_loss = 0.0;
  bool actor_updated = false;
};

// Online + target networks, optimizers and update counters.
class Td3Agent {
 public:
  Td3Agent(std::unique_ptr<Actor> actor, TwinCritic critics, const TrainerConfig& config);
  Td3Agent(const Td3Agent& other);
  Td3Agent& operator=(const Td3Agent&) = delete;

  // Critic step every call; actor + soft target updates every policy_delay calls.
  UpdateStats update(const Batch& batch, std::mt19937_64& target_rng, std::mt19937_64& actor_rng,
                     std::int64_t step = -1);

  Actor& actor() { return *actor_; }
  const Actor& actor() const { return *actor_; }
  Actor& target_actor() { return *target_actor_; }
  const Actor& target_actor() const { return *target_actor_; }
  TwinCritic& critics() { return critics_; }
  const TwinCritic& critics() const { return critics_; }
  TwinCritic& target_critics() { return target_critics_; }
  const TwinCritic& target_critics() const { return target_critics_; }
  const TrainerConfig& config() const { return config_; }

  std::int64_t critic_updates() const { return critic_updates_; }
  std::int64_t actor_updates() const { return actor_updates_; }

 private:
  TrainerConfig config_;
  std::unique_ptr<Actor> actor_;
  std::unique_ptr<Actor> target_actor_;
  TwinCritic critics_;
  TwinCritic target_critics_;
  nn::Adam actor_opt_;
  nn::Adam q1_opt_;
  nn::Adam q2_opt_;
  std::int64_t critic_updates_ = 0;
  std::int64_t actor_updates_ = 0;
};

// Per-episode training record.
struct EpisodeMetrics {
  std::int64_t episode = 0;
  std::int64_t env_steps = 0;
  double mean_aoi_per_slot = 0.0;  // device-mean AoI in the final slot
  double episode_avg_aoi = 0.0;    // device-mean AoI averaged over all slots
  double episode_return = 0.0;
  double critic_loss = 0.0;  // mean over this episode's updates (0 if none)
  double actor_loss = 0.0;
  std::int64_t uploads = 0;
  double wall_clock_s = 0.0;
};

struct EvalMetrics {
  std::int64_t env_steps = 0;
  double episode_avg_aoi = 0.0;
  double episode_return = 0.0;
};

using EnvFactory = std::function<env::Environment()>;
using ActionFilter = std::function<void(std::span<double>)>;

struct TrainHooks {
  std::function<void(const EpisodeMetrics&)> on_episode;
  std::function<void(const EvalMetrics&)> on_eval;
  // Applied to every executed action (after exploration noise and clamping).
  ActionFilter action_filter;
  // Receives the replay index batch of every update.
  std::function<void(const std::vector<std::size_t>&)> on_batch;
};

struct TrainResult {
  std::unique_ptr<Td3Agent> agent;
  std::vector<EpisodeMetrics> metrics;
  std::uint64_t layout_seed = 0;
};

// Seed used to place devices for a run (fixed layout) or an episode.
std::uint64_t layout_seed(std::uint64_t env_seed, std::uint64_t trainer_seed, std::int64_t episode = -1);

TrainResult train(const EnvFactory& make_env, ActorKind kind, const TrainerConfig& config,
                  const TrainHooks& hooks = {});

}  // namespace uavaoi::rl
