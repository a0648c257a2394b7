#include "wqc/sequences.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wqc {

namespace {

constexpr double kPi = std::numbers::pi;

// (sigma . sigma) / 2 - 1 on the pair (a, b), embedded.
Operator heisenberg_pair(const SystemSpec& spec, int a, int b) {
  const int n = spec.site_count();
  Operator dot = Operator::Zero(spec.dim(), spec.dim());
  for (Pauli axis : {Pauli::X, Pauli::Y, Pauli::Z})
    dot += embed(pauli(axis), a, n) * embed(pauli(axis), b, n);
  return 0.5 * dot - identity_op(spec.dim());
}

}  // namespace

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::Hyperfine: return "hyperfine";
    case Generator::Dipolar: return "dipolar";
    case Generator::Microwave: return "microwave";
    case Generator::SwapEN: return "swap_en";
    case Generator::SwapEE: return "swap_ee";
  }
  return "?";
}

double PulseSequence::total_duration() const {
  double t = 0.0;
  for (const auto& s : segments) t += s.duration;
  return t;
}

PulseSequence bch_sequence(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("bch_sequence: tau must be positive");
  PulseSequence seq;
  seq.label = "wqc-bch";
  const Generator hf = Generator::Hyperfine;
  const Generator d = Generator::Dipolar;
  const int hf_signs[4] = {+1, -1, -1, +1};
  const int d_signs[4] = {+1, -1, +1, -1};
  for (int cycle = 0; cycle < 4; ++cycle) {
    seq.segments.push_back({hf, hf_signs[cycle], tau, true});
    seq.segments.push_back({d, d_signs[cycle], tau, true});
  }
  return seq;
}

PulseSequence serial_swap_sequence(const SystemSpec& spec) {
  if (spec.k != 1)
    throw std::invalid_argument("serial_swap_sequence: defined for k = 1 (one nuclear spin "
                                "per node), got k = " + std::to_string(spec.k));
  if (!(spec.dipolar > 0.0))
    throw std::domain_error("serial_swap_sequence: dipolar strength must be positive");
  const double omega_hf = spectral_norm(build_hyperfine(spec));
  if (!(omega_hf > 0.0))
    throw std::domain_error("serial_swap_sequence: hyperfine coupling must be nonzero");

  const double t_hf = (kPi / 2.0) / omega_hf;
  const double t_d = (kPi / 2.0) / spec.dipolar;

  PulseSequence seq;
  seq.label = "serial-swap";
  seq.segments.push_back({Generator::SwapEN, -1, t_hf, true});
  seq.segments.push_back({Generator::SwapEE, -1, t_d, true});
  seq.segments.push_back({Generator::SwapEN, -1, t_hf, true});
  return seq;
}

Operator generator_hamiltonian(Generator g, const SystemSpec& spec) {
  switch (g) {
    case Generator::Hyperfine:
      return build_hyperfine(spec);
    case Generator::Dipolar:
      return build_dipolar(spec);
    case Generator::Microwave:
      return build_microwave(spec);
    case Generator::SwapEN: {
      if (spec.k != 1)
        throw std::invalid_argument("swap_en generator requires k = 1");
      const double omega_hf = spectral_norm(build_hyperfine(spec));
      return omega_hf * (heisenberg_pair(spec, spec.electron_site(0), spec.nuclear_site(0, 0)) +
                         heisenberg_pair(spec, spec.electron_site(1), spec.nuclear_site(1, 0)));
    }
    case Generator::SwapEE:
      return spec.dipolar * heisenberg_pair(spec, spec.electron_site(0), spec.electron_site(1));
  }
  throw std::invalid_argument("generator_hamiltonian: unresolvable generator id");
}

Operator sequence_propagator(const PulseSequence& seq, const SystemSpec& spec) {
  Operator u = identity_op(spec.dim());
  const cplx mi(0.0, -1.0);
  for (const auto& seg : seq.segments) {
    const Operator h = generator_hamiltonian(seg.generator, spec);
    u = u * expm(mi * static_cast<double>(seg.sign) * seg.duration * h);
  }
  return u;
}

double select_tau(const SystemSpec& spec, MatrixNorm norm_kind) {
  const double nd = matrix_norm(build_dipolar(spec), norm_kind);
  const double nhf = matrix_norm(build_hyperfine(spec), norm_kind);
  if (!(nd > 0.0) || !(nhf > 0.0))
    throw std::domain_error("select_tau: dipolar and hyperfine couplings must be nonzero");
  return std::cbrt(kPi / (2.0 * nd * nhf * nhf));
}

Operator swap_unitary(const SystemSpec& spec, int site_a, int site_b) {
  const int n = spec.site_count();
  if (site_a < 0 || site_a >= n || site_b < 0 || site_b >= n)
    throw std::invalid_argument("swap_unitary: site out of range");
  if (site_a == site_b) throw std::invalid_argument("swap_unitary: sites must be distinct");
  return expm(cplx(0.0, kPi / 2.0) * heisenberg_pair(spec, site_a, site_b));
}

}  // namespace wqc
