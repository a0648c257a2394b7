#pragma once

#include <optional>
#include <utility>

#include "wqc/sequences.hpp"
#include "wqc/spin_system.hpp"

namespace wqc {

// Phase and amplitude damping rates for one electron. electron_index is
// 1-based (1 or 2) to match the node labels.
struct DissipatorParams {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  int electron_index = 1;
};

// Gamma_1 = 1/T1, Gamma_2 = (2 T1 - T2) / (T1 T2). Throws when T2 > 2 T1
// (negative Gamma_2) or the times are not positive.
std::pair<double, double> gammas_from_times(const NoiseParams& noise);

// Column-stacking Liouvillian: L = 1 (x) H - H^T (x) 1, so that
// L vec(rho) = vec([H, rho]).
SuperOp liouvillian(const Operator& h);

// Superoperator for rho -> A rho B; in column stacking this is B^T (x) A.
SuperOp sandwich_superop(const Operator& a, const Operator& b);

// Superoperator of rho -> U rho U^dag.
SuperOp conjugation_superop(const Operator& u);

// Single-electron dissipator embedded on the full Liouville space.
// The kron ordering is pinned by the population/coherence decay rates:
// excited population decays as exp(-t/T1) and coherences as exp(-t/T2).
// The jump operator is |0><1| (the half-convention raising operator);
// the printed form with sigma_x + i sigma_y is not trace preserving.
SuperOp electron_dissipator(const DissipatorParams& params, const SystemSpec& spec);

// The 4x4 dissipator of a bare qubit with the same conventions; the anchor
// for the decay-rate tests.
SuperOp qubit_dissipator(double gamma1, double gamma2);

// vec(rho_n) -> vec(|down,down><down,down| (x) rho_n). Electron "down" is
// basis index 1 (the -1 eigenvector of sigma_z).
SuperOp prep_superop(const SystemSpec& spec);

// Partial trace over both electrons: full Liouville -> nuclear Liouville.
SuperOp trace_superop(const SystemSpec& spec);

// Assemble the nuclear-space channel for a pulse sequence: per segment
// G = -i sign L_gen - i L_mw (if with_microwave) + D_1 + D_2 (if noise and
// the segment carries noise), exponentiated for the segment duration,
// composed in propagator order, and sandwiched by prep / trace.
SuperOp channel_superop(const PulseSequence& seq, const SystemSpec& spec,
                        const std::optional<NoiseParams>& noise, bool with_microwave);

// Choi matrix of a square superoperator by index reshuffle.
Operator choi_matrix(const SuperOp& s);

}  // namespace wqc
