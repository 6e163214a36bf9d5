#pragma once

// Small fully-connected networks with hand-written reverse mode.
//
// Parameters of a network live in one flat vector so that optimizers, soft
// target updates, checkpoints and finite-difference checks all treat them
// uniformly. Batches are column-major: one sample per column.

#include <Eigen/Core>
#include <random>
#include <string>
#include <vector>

namespace uavaoi::nn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Activation { identity, tanh, mish };

std::string to_string(Activation a);
Activation activation_from_string(const std::string& name);

// mish(x) = x * tanh(softplus(x))
Eigen::ArrayXXd mish(const Eigen::ArrayXXd& x);
Eigen::ArrayXXd mish_grad(const Eigen::ArrayXXd& x);

// Intermediate values from a recorded forward pass.
struct Tape {
  std::vector<Matrix> inputs;   // input to layer l
  std::vector<Matrix> preacts;  // W x + b of layer l
  Matrix output;
};

class Mlp {
 public:
  Mlp() = default;
  // `sizes` = {in, hidden..., out}; every layer but the last uses `hidden`.
  Mlp(std::vector<int> sizes, Activation hidden, Activation output);

  // Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) for weights and biases.
  void init(std::mt19937_64& rng);

  int input_dim() const { return sizes_.front(); }
  int output_dim() const { return sizes_.back(); }
  const std::vector<int>& sizes() const { return sizes_; }
  Activation hidden_activation() const { return hidden_; }
  Activation output_activation() const { return output_; }
  Eigen::Index num_params() const { return params_.size(); }

  Vector& params() { return params_; }
  const Vector& params() const { return params_; }

  Matrix forward(const Matrix& x) const;
  Matrix forward(const Matrix& x, Tape& tape) const;

  // Back-propagates dL/d(output). Accumulates dL/d(params) into `param_grad`
  // when it is non-null and returns dL/d(input).
  Matrix backward(const Tape& tape, const Matrix& grad_output, Vector* param_grad) const;

 private:
  struct LayerView {
    Eigen::Index weight_offset;
    Eigen::Index bias_offset;
    int in;
    int out;
  };

  std::vector<int> sizes_;
  Activation hidden_ = Activation::mish;
  Activation output_ = Activation::identity;
  std::vector<LayerView> layers_;
  Vector params_;
};

}  // namespace uavaoi::nn
