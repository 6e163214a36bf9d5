#pragma once

// Discrete-time UAV wireless-power / data-collection scenario.
//
// Each slot of length dt the UAV first moves, then broadcasts energy to every
// device for tau*dt seconds, then listens to one scheduled device for the
// remaining (1 - tau)*dt seconds. AoI is counted in slots and resets to 1 when
// the scheduled device delivers a fresh packet.
//
// Observation layout (length 2 + 4N, every component in [-1, 1]):
//   [0, 2)             UAV x, y           (pos / area_side) * 2 - 1
//   [2, 2 + 2N)        device i x, y      same mapping, interleaved (x0, y0, x1, y1, ...)
//   [2 + 2N, 2 + 3N)   energy_j[i] / battery_capacity_j
//   [2 + 3N, 2 + 4N)   min(aoi[i], aoi_clip) / aoi_clip
//
// Action layout (length N + 3, every component in [-1, 1], clamped on entry):
//   [0, 2)             UAV velocity as a fraction of vmax
//   [2, 2 + N)         scheduling scores; argmax uploads (ties -> lowest index)
//   [2 + N]            tau_raw; charging fraction tau = (tau_raw + 1) / 2

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "uavaoi/env/config.hpp"
#include "uavaoi/env/physics.hpp"

namespace uavaoi::env {

inline std::size_t observation_dim(int num_devices) { return 2 + 4 * static_cast<std::size_t>(num_devices); }
inline std::size_t action_dim(int num_devices) { return 3 + static_cast<std::size_t>(num_devices); }

struct EnvState {
  int slot_index = 0;
  Vec2 uav_xy;
  std::vector<Vec2> device_xy;
  std::vector<double> energy_j;
  std::vector<std::int64_t> aoi;

  bool operator==(const EnvState&) const = default;
};

struct SlotAction {
  Vec2 vel;
  std::vector<double> sched_scores;
  double tau_raw = 0.0;

  static SlotAction from_vector(std::span<const double> flat, int num_devices);
  std::vector<double> to_vector() const;
  SlotAction clamped() const;
  double charging_fraction() const;  // tau of the clamped action
  std::size_t scheduled_device() const;
};

struct StepInfo {
  std::size_t scheduled_device = 0;
  bool upload_success = false;
  // Energy actually banked by each device this slot (after the capacity cap).
  std::vector<double> harvested_j;
  double energy_spent_j = 0.0;
  double mean_aoi = 0.0;  // unclipped, after the update
};

struct StepOutcome {
  std::vector<double> observation;
  double reward = 0.0;
  bool done = false;
  StepInfo info;
};

struct UploadResult {
  bool success = false;
  double energy_spent_j = 0.0;
};

// Validates `config`, then draws device positions uniformly over the area.
std::pair<EnvState, std::vector<double>> reset(const EnvConfig& config, std::uint64_t seed);

UploadResult upload_attempt(const EnvState& state, std::size_t device_index, double tau,
                            const EnvConfig& config);

// Advances `state` by one slot. Throws UsageError on a finished episode or a
// malformed action.
StepOutcome step(EnvState& state, const SlotAction& action, const EnvConfig& config);

std::vector<double> observe(const EnvState& state, const EnvConfig& config);

// -min(aoi, clip) averaged over devices, divided by clip.
double slot_reward(const EnvState& state, const EnvConfig& config);

// Owning wrapper used by trainers and evaluators.
class Environment {
 public:
  explicit Environment(EnvConfig config);

  const std::vector<double>& reset(std::uint64_t seed);
  StepOutcome step(std::span<const double> action);

  const EnvConfig& config() const { return config_; }
  const EnvState& state() const { return state_; }
  std::size_t observation_dim() const { return env::observation_dim(config_.num_devices); }
  std::size_t action_dim() const { return env::action_dim(config_.num_devices); }
  bool done() const { return state_.slot_index >= config_.episode_slots; }

 private:
  EnvConfig config_;
  EnvState state_;
  std::vector<double> observation_;
};

}  // namespace uavaoi::env
