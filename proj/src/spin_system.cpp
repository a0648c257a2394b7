#include "wqc/spin_system.hpp"

#include <cmath>
#include <stdexcept>

namespace wqc {

SystemSpec SystemSpec::defaults(int k) {
  if (k < 1 || k > 2)
    throw std::invalid_argument("SystemSpec::defaults: built-in parameters cover k in {1, 2}");
  SystemSpec spec;
  spec.k = k;
  spec.hyperfine = {Eigen::Vector3d(20e6, 0.0, 60e6) * kTwoPi,
                    Eigen::Vector3d(35e6, 0.0, 15e6) * kTwoPi};
  spec.hyperfine.resize(k);
  spec.nuclear_zeeman.assign(k, 1e6 * kTwoPi);
  spec.dipolar = 1e6 * kTwoPi;
  spec.rabi = 100e6 * kTwoPi;
  return spec;
}

int SystemSpec::electron_site(int node) const {
  if (node < 0 || node > 1) throw std::invalid_argument("electron_site: node must be 0 or 1");
  return node;
}

int SystemSpec::nuclear_site(int node, int idx) const {
  if (node < 0 || node > 1) throw std::invalid_argument("nuclear_site: node must be 0 or 1");
  if (idx < 0 || idx >= k)
    throw std::invalid_argument("nuclear_site: nuclear index " + std::to_string(idx) +
                                " out of range for k = " + std::to_string(k));
  return 2 + node * k + idx;
}

std::vector<std::string> SystemSpec::validate() const {
  if (k < 1) throw std::invalid_argument("SystemSpec: k must be >= 1");
  if (static_cast<int>(hyperfine.size()) != k)
    throw std::invalid_argument("SystemSpec: expected " + std::to_string(k) +
                                " hyperfine vectors, got " + std::to_string(hyperfine.size()));
  if (static_cast<int>(nuclear_zeeman.size()) != k)
    throw std::invalid_argument("SystemSpec: expected " + std::to_string(k) +
                                " nuclear Zeeman values, got " +
                                std::to_string(nuclear_zeeman.size()));

  std::vector<std::string> warnings;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const double na = hyperfine[a].norm();
      const double nb = hyperfine[b].norm();
      if (std::abs(na - nb) <= 1e-9 * std::max({na, nb, 1.0})) {
        warnings.push_back("hyperfine magnitudes for nuclear indices " + std::to_string(a) +
                           " and " + std::to_string(b) +
                           " coincide; spins are not spectroscopically resolved");
      }
    }
  }
  return warnings;
}

Operator build_nuclear_zeeman(const SystemSpec& spec) {
  const int n = spec.site_count();
  Operator h = Operator::Zero(spec.dim(), spec.dim());
  const auto sz = pauli(Pauli::Z);
  for (int j = 0; j < spec.k; ++j) {
    h += spec.nuclear_zeeman[j] *
         (embed(sz, spec.nuclear_site(0, j), n) + embed(sz, spec.nuclear_site(1, j), n));
  }
  return h;
}

Operator build_dipolar(const SystemSpec& spec) {
  const int n = spec.site_count();
  const Operator zz = embed(pauli(Pauli::Z), 0, n) * embed(pauli(Pauli::Z), 1, n);
  const Operator xx = embed(pauli(Pauli::X), 0, n) * embed(pauli(Pauli::X), 1, n);
  const Operator yy = embed(pauli(Pauli::Y), 0, n) * embed(pauli(Pauli::Y), 1, n);
  return spec.dipolar * (2.0 * zz - xx - yy);
}

Operator build_hyperfine(const SystemSpec& spec) {
  const int n = spec.site_count();
  Operator h = Operator::Zero(spec.dim(), spec.dim());
  const Eigen::Matrix2cd comps[3] = {pauli(Pauli::X), pauli(Pauli::Y), pauli(Pauli::Z)};
  for (int node = 0; node < 2; ++node) {
    const Operator ez = embed(pauli(Pauli::Z), spec.electron_site(node), n);
    for (int j = 0; j < spec.k; ++j) {
      for (int c = 0; c < 3; ++c) {
        if (spec.hyperfine[j](c) == 0.0) continue;
        h += spec.hyperfine[j](c) * ez * embed(comps[c], spec.nuclear_site(node, j), n);
      }
    }
  }
  return h;
}

Operator build_microwave(const SystemSpec& spec) {
  if (spec.k != 1)
    throw std::invalid_argument(
        "build_microwave: the selective drive is defined for one nuclear spin per node "
        "(k = 1); its generalization to k = " +
        std::to_string(spec.k) + " is unspecified");
  const int n = spec.site_count();
  const Operator sx_sum = embed(pauli(Pauli::X), 0, n) + embed(pauli(Pauli::X), 1, n);
  const Operator mix = embed(pauli(Pauli::EPlus), spec.nuclear_site(0, 0), n) *
                           embed(pauli(Pauli::EMinus), spec.nuclear_site(1, 0), n) +
                       embed(pauli(Pauli::EMinus), spec.nuclear_site(0, 0), n) *
                           embed(pauli(Pauli::EPlus), spec.nuclear_site(1, 0), n);
  return spec.rabi * sx_sum * mix;
}

Operator total_hamiltonian(const SystemSpec& spec) {
  return build_nuclear_zeeman(spec) + build_dipolar(spec) + build_hyperfine(spec);
}

}  // namespace wqc
