#pragma once

#include "uavaoi/nn/mlp.hpp"

namespace uavaoi::nn {

// Adam with bias correction (PyTorch defaults).
class Adam {
 public:
  Adam() = default;
  Adam(Eigen::Index size, double lr, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

  void step(Vector& params, const Vector& grad);

  double learning_rate() const { return lr_; }
  long steps() const { return t_; }

 private:
  double lr_ = 3e-4;
  double beta1_ = 0.9;
  double beta2_ = 0.999;
  double eps_ = 1e-8;
  long t_ = 0;
  Vector m_;
  Vector v_;
};

// target <- rho * online + (1 - rho) * target
void soft_update(Vector& target, const Vector& online, double rho);

}  // namespace uavaoi::nn
