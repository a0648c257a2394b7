#include "wqc/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace wqc {

double process_fidelity(const SuperOp& s_ideal, const SuperOp& s_noisy) {
  if (s_ideal.rows() != s_ideal.cols() || s_noisy.rows() != s_noisy.cols() ||
      s_ideal.rows() != s_noisy.rows())
    throw std::invalid_argument("process_fidelity: superoperator dimensions do not match");
  const double d2 = static_cast<double>(s_ideal.rows());
  const cplx tr = (s_ideal.adjoint() * s_noisy).trace();
  if (std::abs(tr.imag()) / d2 > 1e-10)
    throw std::logic_error("process_fidelity: trace has a non-negligible imaginary part (" +
                           std::to_string(tr.imag() / d2) + ")");
  return tr.real() / d2;
}

double neg_log10_infidelity(double fidelity) {
  const double clamped = std::min(fidelity, 1.0 - 1e-15);
  return -std::log10(1.0 - clamped);
}

namespace {

struct ProtocolChannels {
  PulseSequence sequence;
  SuperOp ideal;
};

ProtocolChannels make_protocol(const SystemSpec& spec, Protocol protocol) {
  // The swept wide-channel protocol runs the bare commutator-isolation
  // cycle; the selective drive enters the robustness comparison only through
  // the T1*omega_1 axis scale, not as a propagation term (see README).
  switch (protocol) {
    case Protocol::Wqc: {
      PulseSequence seq = bch_sequence(select_tau(spec));
      return {seq, channel_superop(seq, spec, std::nullopt, false)};
    }
    case Protocol::SerialSwap: {
      PulseSequence seq = serial_swap_sequence(spec);
      return {seq, channel_superop(seq, spec, std::nullopt, false)};
    }
  }
  throw std::invalid_argument("make_protocol: unknown protocol");
}

}  // namespace

SweepResult robustness_sweep(const SystemSpec& spec, const std::vector<double>& t_values) {
  if (t_values.empty()) throw std::invalid_argument("robustness_sweep: empty grid");
  if (!std::is_sorted(t_values.begin(), t_values.end()))
    throw std::invalid_argument("robustness_sweep: grid values must be sorted ascending");
  for (double t : t_values)
    if (!(t > 0.0)) throw std::invalid_argument("robustness_sweep: grid values must be positive");

  const ProtocolChannels wqc = make_protocol(spec, Protocol::Wqc);
  const ProtocolChannels swap = make_protocol(spec, Protocol::SerialSwap);

  SweepResult result;
  result.points.resize(t_values.size());
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    SweepPoint& p = result.points[i];
    p.t1 = p.t2 = t_values[i];
    try {
      const NoiseParams noise{p.t1, p.t2};
      p.fidelity_wqc = process_fidelity(wqc.ideal, channel_superop(wqc.sequence, spec, noise, false));
      p.fidelity_swap =
          process_fidelity(swap.ideal, channel_superop(swap.sequence, spec, noise, false));
      p.neg_log10_infid_wqc = neg_log10_infidelity(p.fidelity_wqc);
      p.neg_log10_infid_swap = neg_log10_infidelity(p.fidelity_swap);
    } catch (const std::exception& err) {
      p.fidelity_wqc = p.fidelity_swap = std::nan("");
      p.neg_log10_infid_wqc = p.neg_log10_infid_swap = std::nan("");
      result.errors.push_back("t1=" + format_double(p.t1) + ": " + err.what());
    }
  }
  return result;
}

double protocol_fidelity(const SystemSpec& spec, Protocol protocol, const NoiseParams& noise) {
  const ProtocolChannels chans = make_protocol(spec, protocol);
  return process_fidelity(chans.ideal, channel_superop(chans.sequence, spec, noise, false));
}

CptpReport cptp_report(const SuperOp& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("cptp_report: superoperator not square");
  const int d2 = static_cast<int>(s.rows());
  const int d = static_cast<int>(std::lround(std::sqrt(double(d2))));

  CptpReport report;
  const Eigen::VectorXcd vec_id = vec(identity_op(d));
  report.trace_residual = (vec_id.adjoint() * s - vec_id.adjoint()).cwiseAbs().maxCoeff();

  const Operator choi = choi_matrix(s);
  report.hermiticity_residual = (choi - choi.adjoint()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (choi + choi.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  report.choi_min_eigenvalue = es.eigenvalues().minCoeff();
  return report;
}

std::string format_double(double value) {
  char buf[40];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 12);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string csv =
      "t1_s,t2_s,fidelity_wqc,fidelity_swap,neg_log10_infid_wqc,neg_log10_infid_swap\n";
  for (const auto& p : result.points) {
    csv += format_double(p.t1);
    csv += ',';
    csv += format_double(p.t2);
    csv += ',';
    csv += format_double(p.fidelity_wqc);
    csv += ',';
    csv += format_double(p.fidelity_swap);
    csv += ',';
    csv += format_double(p.neg_log10_infid_wqc);
    csv += ',';
    csv += format_double(p.neg_log10_infid_swap);
    csv += '\n';
  }
  return csv;
}

double infidelity_loglog_slope(const SweepResult& result, double t_min) {
  std::vector<double> x, y;
  for (const auto& p : result.points) {
    if (p.t1 < t_min || !std::isfinite(p.fidelity_wqc)) continue;
    const double infid = std::max(1.0 - p.fidelity_wqc, 1e-300);
    x.push_back(std::log10(1.0 / p.t1));
    y.push_back(std::log10(infid));
  }
  if (x.size() < 2)
    throw std::invalid_argument("infidelity_loglog_slope: need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace wqc
