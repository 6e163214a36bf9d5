#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "uavaoi/env/environment.hpp"

namespace uavaoi::rl {

using PolicyFn = std::function<std::vector<double>(std::span<const double> observation)>;

struct EpisodeSummary {
  double episode_avg_aoi = 0.0;    // device-mean AoI averaged over slots
  double mean_aoi_per_slot = 0.0;  // device-mean AoI of the final slot
  double episode_return = 0.0;
  std::int64_t uploads = 0;
};

// Accumulates per-slot statistics of one episode.
class EpisodeTally {
 public:
  void add(const env::StepOutcome& outcome);
  EpisodeSummary summary() const;
  std::int64_t slots() const { return slots_; }
  void clear() { *this = EpisodeTally{}; }

 private:
  std::int64_t slots_ = 0;
  double aoi_sum_ = 0.0;
  double last_mean_aoi_ = 0.0;
  double return_ = 0.0;
  std::int64_t uploads_ = 0;
};

// Resets `env` with `layout_seed` and plays one full episode.
EpisodeSummary run_episode(env::Environment& env, std::uint64_t layout_seed, const PolicyFn& policy);

}  // namespace uavaoi::rl
