#pragma once

#include <string>
#include <vector>

#include "wqc/spin_system.hpp"

namespace wqc {

enum class Generator { Hyperfine, Dipolar, Microwave, SwapEN, SwapEE };

const char* generator_name(Generator g);

// One piecewise-constant evolution interval. Propagator convention:
// exp(-i * sign * H * duration), so sign +1 is forward evolution under the
// resolved generator.
struct Segment {
  Generator generator = Generator::Hyperfine;
  int sign = 1;
  double duration = 0.0;
  bool with_noise = true;
};

// Segments are stored in propagator order: the first entry is the leftmost
// factor of the operator product and therefore the *last* interval in time.
// This matches the published display order of the cycles.
struct PulseSequence {
  std::vector<Segment> segments;
  std::string label;

  double total_duration() const;
};

// The 8-segment cycle e^X e^Y e^-X e^-Y e^-X e^Y e^X e^-Y with
// X = -i tau H_HF and Y = -i tau H_D, which isolates the second-order
// commutator: log U(8 tau) = +i tau^3 [[H_D, H_HF], H_HF] + O(tau^4).
PulseSequence bch_sequence(double tau);

// Serial transfer through the actuators: nuclei onto electrons, electron
// exchange, and back. Generators are the pairwise Heisenberg forms
// omega * (sigma.sigma / 2 - 1); with sign -1 each interval realizes
// exp(+i t omega (sigma.sigma / 2 - 1)), a pair SWAP when t * omega = pi/2.
// Durations satisfy t_hf * |H_HF| = t_d * omega_d = pi/2.
PulseSequence serial_swap_sequence(const SystemSpec& spec);

// Resolve a segment generator to its Hamiltonian on the full Hilbert space.
Operator generator_hamiltonian(Generator g, const SystemSpec& spec);

// Ordered product of exp(-i sign H duration), first segment leftmost.
Operator sequence_propagator(const PulseSequence& seq, const SystemSpec& spec);

// tau such that tau^3 |H_D| |H_HF|^2 = pi/2 (spectral norm by default).
double select_tau(const SystemSpec& spec, MatrixNorm norm_kind = MatrixNorm::Spectral);

// Two-site SWAP via exp(i (pi/2) (sigma.sigma / 2 - 1)); equals the
// permutation matrix times exp(-i pi/4).
Operator swap_unitary(const SystemSpec& spec, int site_a, int site_b);

}  // namespace wqc
