#pragma once

#include <random>

#include "uavaoi/nn/mlp.hpp"

namespace uavaoi::nn {

// Column-major fill, so the draw order is fixed for a given shape.
inline Matrix standard_normal(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < out.size(); ++i) out.data()[i] = dist(rng);
  return out;
}

}  // namespace uavaoi::nn
