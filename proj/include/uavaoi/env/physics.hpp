#pragma once

#include <cstddef>

namespace uavaoi::env {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Vec2&) const = default;
};

// Free-space line-of-sight power gain between a UAV at `altitude` above `uav_xy`
// and a ground device at `device_xy`.
double channel_gain(Vec2 uav_xy, double altitude, Vec2 device_xy, double ref_gain);

// Linear RF harvesting over the charging part (tau) of a slot.
double harvest_amount(double gain, double wpt_tx_power_w, double tau, double slot_duration_s,
                      double efficiency);

// Bits deliverable in `window_s` seconds at the given received SNR.
double achievable_bits(double bandwidth_hz, double window_s, double snr);

}  // namespace uavaoi::env
