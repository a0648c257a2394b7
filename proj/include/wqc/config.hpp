#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wqc/spin_system.hpp"

namespace wqc {

// Raised for malformed configuration documents; the message names the field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepGrid {
  double t_min_s = 1e-7;
  double t_max_s = 1e-2;
  int points = 25;

  // Log-spaced grid, ascending, endpoints included.
  std::vector<double> values() const;
};

struct RunConfig {
  SystemSpec system;
  SweepGrid sweep;
  std::string out_dir = "out";
  std::vector<std::string> verify;  // empty = run every named check
};

RunConfig default_run_config();

// JSON document; frequencies in Hz (converted to rad/s on load), times in
// seconds. Schema documented in the README.
RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& json_text);
std::string run_config_to_json(const RunConfig& config);

}  // namespace wqc
