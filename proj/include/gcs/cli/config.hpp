#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcs/analysis.hpp"

namespace gcs::cli {

/// Parses a configuration document. Either {"preset": name} or
/// {"manipulator": kind, "geometry": {...}}; both forms accept "pose" (home
/// pose overrides) and, for smg, "third_normal". Throws ConfigError.
Model parse_config(std::string_view json_text);
Model load_config(const std::filesystem::path& path);

/// "name=value".
std::pair<std::string, double> parse_assignment(std::string_view text);
std::map<std::string, double> parse_assignments(const std::vector<std::string>& items);

struct GridAxis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int samples = 1;

  /// min + (max - min) * k / (samples - 1); min for a single sample.
  double at(int k) const;
};

/// "name=min:max:samples"; requires samples >= 1 and min <= max.
GridAxis parse_grid_axis(std::string_view text);

struct SweepSpec {
  std::vector<GridAxis> axes;  // first axis varies slowest
  int jobs = 1;
};

/// 17 significant digits, decimal point, no grouping, independent of locale.
std::string format_number(double v);

}  // namespace gcs::cli
