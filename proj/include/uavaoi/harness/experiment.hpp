#pragma once

// Multi-seed experiment orchestration. A config file has three tables:
//   [env]         every EnvConfig field (seed and failed_upload_drains optional)
//   [trainer]     TrainerConfig overrides; omitted keys keep their defaults
//   [experiment]  policy_kinds, seeds, output_dir, plot, plot_window, plot_x, jobs
// Each (policy, seed) cell writes only inside <output_dir>/<policy>/seed_<s>/.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "uavaoi/baselines/policies.hpp"
#include "uavaoi/env/config.hpp"
#include "uavaoi/harness/kv_config.hpp"
#include "uavaoi/rl/td3.hpp"

namespace uavaoi::harness {

// Relative output_dir values are resolved against this variable when set.
inline constexpr const char* kOutputRootEnv = "UAVAOI_OUTPUT_ROOT";
inline constexpr const char* kManifestFile = "manifest.json";
inline constexpr const char* kResolvedConfigFile = "resolved_config.toml";

struct ExperimentConfig {
  env::EnvConfig env;
  rl::TrainerConfig trainer;
  std::vector<baselines::PolicyKind> policy_kinds;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output_dir;
  bool plot = true;
  int plot_window = 20;
  std::string plot_x = "episodes";  // or env_steps
  int jobs = 1;
};

void write_trainer_config(KvDocument& doc, const rl::TrainerConfig& config, const std::string& table = "trainer");
rl::TrainerConfig read_trainer_config(const KvDocument& doc, const std::string& table = "trainer");

// Throws ConfigError naming the offending key.
ExperimentConfig parse_experiment(const KvDocument& doc);
KvDocument to_document(const ExperimentConfig& config);
void validate(const ExperimentConfig& config);

// Reads a TOML config, or the resolved config embedded in a run manifest when
// the path names a manifest.json, then applies "key=value" overrides.
ExperimentConfig load_experiment(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});

std::filesystem::path resolve_output_dir(const std::filesystem::path& dir);

std::filesystem::path cell_dir(const std::filesystem::path& artifact_dir, baselines::PolicyKind kind,
                               std::uint64_t seed);

struct CellResult {
  baselines::PolicyKind kind{};
  std::uint64_t seed = 0;
  std::filesystem::path dir;
  std::int64_t episodes = 0;
};

struct RunReport {
  std::filesystem::path artifact_dir;
  std::vector<CellResult> cells;
};

// Trains (learned kinds) or rolls out (baselines) every cell, writing metrics,
// checkpoints, the manifest and optionally the convergence plot. A failing cell
// keeps its partial metrics; the first failure is rethrown after all cells end.
RunReport run_experiment(const ExperimentConfig& config);

RunReport run(const std::filesystem::path& config_path, const std::vector<std::string>& overrides = {});

// Runs one cell into `dir`.
CellResult run_cell(const ExperimentConfig& config, baselines::PolicyKind kind, std::uint64_t seed,
                    const std::filesystem::path& dir);

}  // namespace uavaoi::harness
