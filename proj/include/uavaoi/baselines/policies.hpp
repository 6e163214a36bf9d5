#pragma once

#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "uavaoi/env/environment.hpp"
#include "uavaoi/rl/actor.hpp"
#include "uavaoi/rl/rollout.hpp"

namespace uavaoi::baselines {

enum class PolicyKind { dtd3, td3, no_charge_dtd3, no_charge_td3, random, greedy_max_aoi };

std::string to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& name);
std::vector<PolicyKind> all_policy_kinds();

bool is_learned(PolicyKind kind);
bool forces_no_charge(PolicyKind kind);
// Actor implementation behind a learned kind.
rl::ActorKind actor_kind(PolicyKind kind);

using Policy = rl::PolicyFn;

// Sets tau_raw (last component) to -1, i.e. no energy broadcast.
void force_no_charge(std::span<double> action);

Policy no_charge_wrap(Policy inner);

env::SlotAction greedy_max_aoi(std::span<const double> observation, int num_devices);

env::SlotAction random_policy(std::mt19937_64& rng, int num_devices);

// Callable for a non-learned kind; `seed` feeds the random policy.
Policy make_baseline(PolicyKind kind, int num_devices, std::uint64_t seed);

// Greedy (no exploration noise) policy around a trained actor. Diffusion actors
// still run their chain using a generator seeded with `seed`.
Policy make_actor_policy(std::shared_ptr<const rl::Actor> actor, bool no_charge, std::uint64_t seed);

}  // namespace uavaoi::baselines
