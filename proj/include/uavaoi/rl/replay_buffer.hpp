#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "uavaoi/nn/mlp.hpp"

namespace uavaoi::rl {

struct Transition {
  std::vector<double> observation;
  std::vector<double> action;
  double reward = 0.0;
  std::vector<double> next_observation;
  bool done = false;

  bool operator==(const Transition&) const = default;
};

// Column-per-sample mini-batch.
struct Batch {
  nn::Matrix obs;
  nn::Matrix action;
  nn::Vector reward;
  nn::Matrix next_obs;
  nn::Vector done;  // 1.0 for terminal transitions

  Eigen::Index size() const { return obs.cols(); }
};

// Fixed-capacity FIFO ring. Storage grows on demand up to `capacity`.
class ReplayBuffer {
 public:
  static constexpr std::size_t kDefaultCapacity = 1'000'000;

  ReplayBuffer(std::size_t capacity, std::size_t obs_dim, std::size_t action_dim);

  void push(const Transition& t);

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t obs_dim() const { return obs_dim_; }
  std::size_t action_dim() const { return action_dim_; }

  // i-th stored transition, oldest first.
  Transition at(std::size_t i) const;

  std::vector<std::size_t> sample_indices(std::size_t batch_size, std::mt19937_64& rng) const;
  Batch gather(const std::vector<std::size_t>& indices) const;
  Batch sample(std::size_t batch_size, std::mt19937_64& rng) const { return gather(sample_indices(batch_size, rng)); }

 private:
  std::size_t slot_of(std::size_t i) const;
  std::size_t row_width() const { return 2 * obs_dim_ + action_dim_ + 2; }

  std::size_t capacity_;
  std::size_t obs_dim_;
  std::size_t action_dim_;
  std::size_t size_ = 0;
  std::size_t head_ = 0;  // next slot to write once full
  std::vector<double> rows_;
};

}  // namespace uavaoi::rl
