#pragma once

// On-disk checkpoint: a JSON manifest (checkpoint.json) plus one raw
// little-endian float64 file per parameter vector. The manifest records network
// shapes, the diffusion schedule, both configs and a hash of every array.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include "uavaoi/env/config.hpp"
#include "uavaoi/rl/td3.hpp"

namespace uavaoi::rl {

inline constexpr const char* kCheckpointManifest = "checkpoint.json";

struct LoadedCheckpoint {
  env::EnvConfig env;
  TrainerConfig trainer;
  ActorKind kind = ActorKind::mlp;
  std::uint64_t layout_seed = 0;
  std::string policy;  // harness policy label, empty if none was recorded
  std::unique_ptr<Td3Agent> agent;
};

void save_checkpoint(const std::filesystem::path& dir, const Td3Agent& agent, const env::EnvConfig& env,
                     std::uint64_t layout_seed, const std::string& policy = "");

// Throws LoadError on missing files, hash mismatches or inconsistent shapes.
LoadedCheckpoint load_checkpoint(const std::filesystem::path& dir);

std::uint64_t fnv1a64(const void* data, std::size_t bytes);

}  // namespace uavaoi::rl
