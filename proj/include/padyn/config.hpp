#pragma once

#include <filesystem>
#include <string>

namespace padyn {

// Run-wide defaults, read from a "key = value" file (# starts a comment).
// Unknown keys and out-of-range values are rejected with UsageError.
struct RunConfig {
  long prime = 3;
  int precision = 20;
  int n_max = 50;
  int grid = 10;
  int window = 2;
  double weight_exponent = 2.0;
  int gap_threshold = 2;
  double energy_scale = 1.0;
  std::string output_dir = ".";
  long ap_bound = 10000;
  int depth = 8;
  long pnt_x = 1000000;
  long axiom_x = 100000;
  double growth_constant = 2.0;

  static RunConfig parse(const std::string& text);
  static RunConfig load(const std::filesystem::path& path);
  void set(const std::string& key, const std::string& value);
  void validate() const;
};

}  // namespace padyn
