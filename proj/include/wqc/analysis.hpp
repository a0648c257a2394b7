#pragma once

#include <string>
#include <vector>

#include "wqc/liouville.hpp"

namespace wqc {

// Hilbert-Schmidt process fidelity Re Tr(S_ideal^dag S_noisy) / d^2, with d
// the Hilbert dimension underlying the superoperators. The imaginary part
// of the trace is checked as a consistency guard.
double process_fidelity(const SuperOp& s_ideal, const SuperOp& s_noisy);

// -log10(1 - F), with F clamped at 1 - 1e-15.
double neg_log10_infidelity(double fidelity);

struct SweepPoint {
  double t1 = 0.0;
  double t2 = 0.0;
  double fidelity_wqc = 0.0;
  double fidelity_swap = 0.0;
  double neg_log10_infid_wqc = 0.0;
  double neg_log10_infid_swap = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  // One entry per failed point ("t1=...: message"); failures leave NaN
  // fidelities in the corresponding row.
  std::vector<std::string> errors;
};

enum class Protocol { Wqc, SerialSwap };

// Fidelity-vs-noise comparison with T1 = T2 = t at each grid value. The
// channel pair for one protocol is the noiseless and noisy assembly of the
// same sequence; the comparison grid is shared.
SweepResult robustness_sweep(const SystemSpec& spec, const std::vector<double>& t_values);

// Ideal/noisy channel pair for one protocol at one noise point; exposed for
// the acceptance suite's off-grid reference evaluations.
double protocol_fidelity(const SystemSpec& spec, Protocol protocol, const NoiseParams& noise);

struct CptpReport {
  double trace_residual = 0.0;
  double choi_min_eigenvalue = 0.0;
  double hermiticity_residual = 0.0;
};

CptpReport cptp_report(const SuperOp& s);

// CSV with header t1_s,t2_s,fidelity_wqc,fidelity_swap,
// neg_log10_infid_wqc,neg_log10_infid_swap; 12 significant digits,
// locale-independent.
std::string sweep_to_csv(const SweepResult& result);

// Least-squares slope of log10(1 - F_wqc) against log10(1/t1) over points
// with t1 >= t_min.
double infidelity_loglog_slope(const SweepResult& result, double t_min);

// Shared numeric rendering (12 significant digits, '.' decimal separator).
std::string format_double(double value);

}  // namespace wqc
