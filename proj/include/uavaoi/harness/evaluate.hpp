#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "uavaoi/baselines/policies.hpp"
#include "uavaoi/env/config.hpp"

namespace uavaoi::harness {

struct EvalSummary {
  std::string policy;
  int episodes = 0;
  double mean_episode_avg_aoi = 0.0;
  double std_episode_avg_aoi = 0.0;  // population std over episodes
  double mean_return = 0.0;
  std::vector<double> episode_avg_aoi;
};

// Greedy rollouts of a saved agent. The trained layout is reused unless the
// run randomized layouts, in which case episode i uses a layout drawn from
// `seed`. `expected_env`, when given, must match the checkpoint's dimensions.
EvalSummary evaluate_checkpoint(const std::filesystem::path& checkpoint_dir, int episodes, std::uint64_t seed,
                                const std::optional<env::EnvConfig>& expected_env = std::nullopt);

// Name-only evaluation of a stateless baseline.
EvalSummary evaluate_policy(baselines::PolicyKind kind, const env::EnvConfig& env, int episodes, std::uint64_t seed);

std::string to_json_text(const EvalSummary& summary);

}  // namespace uavaoi::harness
