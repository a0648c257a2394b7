#pragma once

#include <string>
#include <vector>

#include "wqc/numerics.hpp"

namespace wqc {

// Two identical nodes, each one electron actuator plus k nuclear processor
// spins. Site ordering is [e1, e2, n11..n1k, n21..n2k]; site 0 is the
// leftmost tensor factor. All frequencies are angular (rad/s).
struct SystemSpec {
  int k = 1;
  std::vector<Eigen::Vector3d> hyperfine;  // A^j per nuclear index, shared by both nodes
  std::vector<double> nuclear_zeeman;      // omega_z^j
  double dipolar = 0.0;                    // omega_d
  double rabi = 0.0;                       // omega_1

  static SystemSpec defaults(int k = 1);

  int site_count() const { return 2 + 2 * k; }
  int dim() const { return 1 << site_count(); }
  int nuclear_dim() const { return 1 << (2 * k); }

  int electron_site(int node) const;           // node in {0, 1}
  int nuclear_site(int node, int idx) const;   // idx in [0, k)

  // Throws on structural violations (k < 1, list size mismatch, negative
  // nuclear count); returns human-readable warnings for soft ones
  // (hyperfine magnitudes not spectroscopically resolved).
  std::vector<std::string> validate() const;
};

// Electron relaxation times, shared by both electrons in the sweeps.
struct NoiseParams {
  double t1 = 0.0;
  double t2 = 0.0;
};

// Secular Hamiltonians in the frame rotating at the electron Zeeman
// frequency. The electron Zeeman term itself is absorbed by that frame and
// has no builder. The first line of the coupled-node Hamiltonian involves
// only nuclear operators, so it is built here as the nuclear Zeeman term.
Operator build_nuclear_zeeman(const SystemSpec& spec);
Operator build_dipolar(const SystemSpec& spec);
Operator build_hyperfine(const SystemSpec& spec);

// Selective drive mixing the computational and zero-quantum electron
// manifolds; defined for k = 1 only.
Operator build_microwave(const SystemSpec& spec);

Operator total_hamiltonian(const SystemSpec& spec);

}  // namespace wqc
