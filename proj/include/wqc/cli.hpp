#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wqc/analysis.hpp"
#include "wqc/config.hpp"

namespace wqc {

// Exit-status contract, stable for scripting.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsageError = 2;

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

std::vector<std::string> available_checks();

// Runs the named verification checks against the configured system
// (commutator structure, sequence suppression, refocusing, dissipator decay,
// serial swap, channel CPTP). Unknown names raise ConfigError.
std::vector<CheckResult> run_checks(const SystemSpec& spec, const std::vector<std::string>& names);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_dump_sequence(const RunConfig& config, const std::string& which, std::ostream& out,
                      std::ostream& err);

// Fidelity curves as an SVG line plot: x = log10(t1 * omega_1),
// y = -log10(1 - F); solid wqc series, dashed serial-swap series.
std::string svg_line_plot(const SweepResult& result, double omega1);

}  // namespace wqc
