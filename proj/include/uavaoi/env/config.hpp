#pragma once

#include <cstdint>

namespace uavaoi::env {

// Static parameters of one UAV charging / data-collection scenario.
// All physical quantities are SI units.
struct EnvConfig {
  int num_devices = 5;
  double area_side_m = 100.0;
  double uav_altitude_m = 10.0;
  double slot_duration_s = 1.0;
  int episode_slots = 200;
  double uav_vmax_mps = 20.0;
  double channel_ref_gain = 1e-3;  // beta0, power gain at 1 m
  double noise_power_w = 1e-12;
  double bandwidth_hz = 1e6;
  double wpt_tx_power_w = 10.0;
  double harvest_efficiency = 0.8;
  double uplink_tx_power_w = 4e-4;
  double packet_bits = 2e6;
  double battery_capacity_j = 2e-3;
  double initial_energy_j = 4e-4;
  int aoi_clip = 50;
  std::uint64_t seed = 0;
  // When true a failed upload still drains min(energy, required) from the buffer.
  bool failed_upload_drains = false;

  bool operator==(const EnvConfig&) const = default;
};

// Number of full-charging slots within which a device directly below the UAV
// must be able to bank one full-slot upload.
inline constexpr int kFeasibilitySlots = 10;

// Energy for an uplink that occupies the whole slot (tau = 0).
double full_upload_cost_j(const EnvConfig& config);

// Energy harvested in one fully-charging slot (tau = 1) by a device directly below the UAV.
double colocated_full_harvest_j(const EnvConfig& config);

// Smallest energy any successful upload can cost: the shortest feasible window at the
// best possible channel (device directly below the UAV).
double min_upload_cost_j(const EnvConfig& config);

// Throws ConfigError naming the first violated bound.
void validate(const EnvConfig& config);

}  // namespace uavaoi::env
