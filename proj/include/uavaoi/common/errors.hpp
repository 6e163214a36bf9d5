#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uavaoi {

// Invalid or inconsistent configuration value. `field()` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// API misuse: wrong dimensions, stepping a finished episode, etc.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Non-finite loss or value during optimization.
class TrainingFault : public std::runtime_error {
 public:
  TrainingFault(std::int64_t step, const std::string& what)
      : std::runtime_error("training fault at env step " + std::to_string(step) + ": " + what),
        step_(step) {}
  std::int64_t step() const { return step_; }

 private:
  std::int64_t step_;
};

// Checkpoint or metrics file could not be read or does not match expectations.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uavaoi
