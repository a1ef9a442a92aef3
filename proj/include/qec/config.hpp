#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qec/noise.hpp"

namespace qec {

// Flat "key = value" lines, UTF-8, '#' comments, blank lines ignored.
std::map<std::string, std::string> parse_flat_config(std::string_view text);

struct ExperimentConfig {
  std::string code;                 // built-in name or code file path
  std::string channel_kind;         // a Pauli channel kind for sweeps
  double eps_start = 0.0;
  double eps_stop = 0.0;
  unsigned eps_points = 0;
  bool log_scale = false;
  uint64_t trials = 0;
  uint64_t seed = 0;
  bool seed_set = false;
  unsigned workers = 1;
  std::string out_path;             // empty = stdout
  std::string format = "csv";      // csv | json

  static ExperimentConfig from_text(std::string_view text);

  // Throws std::invalid_argument on any violated bound.
  void validate() const;

  std::vector<double> epsilon_grid() const;
  NoiseChannel channel_at(double epsilon) const;
};

}  // namespace qec
