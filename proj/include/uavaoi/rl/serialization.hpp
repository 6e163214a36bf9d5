#pragma once

#include <nlohmann/json.hpp>

#include "uavaoi/env/config.hpp"
#include "uavaoi/rl/td3.hpp"

namespace uavaoi::env {
void to_json(nlohmann::json& j, const EnvConfig& c);
void from_json(const nlohmann::json& j, EnvConfig& c);
}  // namespace uavaoi::env

namespace uavaoi::rl {
void to_json(nlohmann::json& j, const TrainerConfig& c);
void from_json(const nlohmann::json& j, TrainerConfig& c);
}  // namespace uavaoi::rl
