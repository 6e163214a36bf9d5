#pragma once

// Line-delimited JSON metrics: one record per finished episode, flushed as it
// is written so an interrupted run leaves a parseable prefix. Wall-clock time
// goes to a separate timing file to keep metrics byte-reproducible.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "uavaoi/rl/td3.hpp"

namespace uavaoi::harness {

inline constexpr const char* kMetricsFile = "metrics.jsonl";
inline constexpr const char* kTimingFile = "timing.jsonl";
inline constexpr const char* kEvalFile = "eval.jsonl";

std::string metrics_line(const rl::EpisodeMetrics& m, const std::string& policy, std::uint64_t seed);

class MetricsWriter {
 public:
  MetricsWriter(const std::filesystem::path& dir, std::string policy, std::uint64_t seed);

  void write(const rl::EpisodeMetrics& m);
  void write_eval(const rl::EvalMetrics& e);

 private:
  std::string policy_;
  std::uint64_t seed_;
  std::ofstream metrics_;
  std::ofstream timing_;
  std::filesystem::path eval_path_;
  std::ofstream eval_;
};

struct MetricsFile {
  std::filesystem::path path;
  std::string policy;
  std::uint64_t seed = 0;
  std::vector<rl::EpisodeMetrics> records;
};

// Parses complete lines; a torn final line is ignored. Throws LoadError on
// malformed complete lines or non-increasing episode numbers.
MetricsFile read_metrics(const std::filesystem::path& path);

void write_metrics_csv(const std::filesystem::path& path, const MetricsFile& metrics);

}  // namespace uavaoi::harness
