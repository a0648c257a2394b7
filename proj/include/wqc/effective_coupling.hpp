#pragma once

#include <utility>
#include <vector>

#include "wqc/spin_system.hpp"

namespace wqc {

// The six dipolar-alphabet operators for one cross-node pair (l, m), each on
// the full Hilbert space. d_term and f_term are the Hermitian conjugates of
// c_term and e_term.
struct AlphabetTerms {
  Operator a_term;
  Operator b_term;
  Operator c_term;
  Operator d_term;
  Operator e_term;
  Operator f_term;
};

// Sign cycles for refocusing; one sign per nuclear index, applied to that
// index in both nodes. Columns are pairwise orthogonal across cycles.
struct InversionPattern {
  std::vector<std::vector<int>> cycles;
};

// [[H_D, H_HF], H_HF], computed by direct matrix algebra.
Operator double_commutator_channel(const SystemSpec& spec);

// Dipolar-alphabet decomposition for the cross-node pair (l, m), nuclear
// indices 0-based. Prefactors follow the published table; the antisymmetric
// flip-flop line carries an i so b_term is Hermitian.
AlphabetTerms dipolar_alphabet(const SystemSpec& spec, int l, int m);

// The induced coupling for pair (l, m): (A^l . sigma^{n1l})(A^m . sigma^{n2m}).
// This is the operator the double commutator distributes over cross-node
// pairs, and the form the refocusing argument applies to.
Operator induced_pair_coupling(const SystemSpec& spec, int l, int m);

// (parallel, cross): identical-index pair couplings vs the rest.
std::pair<Operator, Operator> split_parallel_cross(const SystemSpec& spec);

// Hadamard-style sign cycles of order 2^ceil(log2 k), restricted to k columns.
InversionPattern inversion_pattern(int k);

// Ideal, instantaneous pi rotations about an axis perpendicular to A^j
// (axis = normalize(A^j x z), falling back to x when A^j is along z),
// applied to n_{1j} and n_{2j} for every index j with sign -1. This sends
// A^j . sigma -> -A^j . sigma on both sites.
Operator inversion_unitary(const SystemSpec& spec, const std::vector<int>& signs);

// (1/|cycles|) sum_s P_s H P_s^dag with H the full induced pair-coupling sum.
Operator refocused_average(const SystemSpec& spec, const InversionPattern& pattern);

}  // namespace wqc
