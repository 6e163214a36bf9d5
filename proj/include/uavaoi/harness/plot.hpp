#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "uavaoi/harness/metrics.hpp"

namespace uavaoi::harness {

enum class XAxis { episodes, env_steps };

struct PlotOptions {
  int window = 20;
  XAxis x_axis = XAxis::episodes;
  std::string metric = "episode_avg_aoi";  // or mean_aoi_per_slot, return
  std::string title = "AoI convergence";
};

// One policy kind: per-seed series smoothed, then mean and population std
// across seeds. Seeds are truncated to the shortest series.
struct Curve {
  std::string label;
  std::vector<double> x;
  std::vector<double> mean;
  std::vector<double> stddev;
  int seeds = 0;
};

// Trailing moving average; the first window-1 points average what is available.
std::vector<double> moving_average(std::span<const double> values, int window);

std::vector<Curve> aggregate_curves(const std::vector<MetricsFile>& files, const PlotOptions& options);

// Expands a shell glob; a directory argument yields every metrics.jsonl beneath it.
std::vector<std::filesystem::path> expand_metrics_glob(const std::string& pattern);

void write_svg(const std::filesystem::path& path, const std::vector<Curve>& curves, const PlotOptions& options);
void write_curves_csv(const std::filesystem::path& path, const std::vector<Curve>& curves);

// Reads every matching metrics file and writes the image (SVG) plus a CSV of
// the plotted series next to it. Throws LoadError when nothing matches.
std::vector<Curve> plot(const std::string& metrics_glob, const std::filesystem::path& output_image,
                        const PlotOptions& options);

}  // namespace uavaoi::harness
