#include "wqc/effective_coupling.hpp"

#include <stdexcept>
#include <string>

namespace wqc {

namespace {

void check_pair_index(const SystemSpec& spec, int idx) {
  if (idx < 0 || idx >= spec.k)
    throw std::invalid_argument("dipolar pair: nuclear index " + std::to_string(idx) +
                                " out of range for k = " + std::to_string(spec.k));
}

Operator site_vector_coupling(const SystemSpec& spec, const Eigen::Vector3d& a, int site) {
  const int n = spec.site_count();
  Operator out = Operator::Zero(spec.dim(), spec.dim());
  const Eigen::Matrix2cd comps[3] = {pauli(Pauli::X), pauli(Pauli::Y), pauli(Pauli::Z)};
  for (int c = 0; c < 3; ++c)
    if (a(c) != 0.0) out += a(c) * embed(comps[c], site, n);
  return out;
}

}  // namespace

Operator double_commutator_channel(const SystemSpec& spec) {
  const Operator hd = build_dipolar(spec);
  const Operator hhf = build_hyperfine(spec);
  return commutator(commutator(hd, hhf), hhf);
}

AlphabetTerms dipolar_alphabet(const SystemSpec& spec, int l, int m) {
  check_pair_index(spec, l);
  check_pair_index(spec, m);
  const int n = spec.site_count();
  const int s1 = spec.nuclear_site(0, l);
  const int s2 = spec.nuclear_site(1, m);
  const Eigen::Vector3d& al = spec.hyperfine[l];
  const Eigen::Vector3d& am = spec.hyperfine[m];
  const cplx i(0.0, 1.0);

  const Operator z1 = embed(pauli(Pauli::Z), s1, n);
  const Operator z2 = embed(pauli(Pauli::Z), s2, n);
  const Operator p1 = embed(pauli(Pauli::Plus), s1, n);
  const Operator p2 = embed(pauli(Pauli::Plus), s2, n);
  const Operator m1 = embed(pauli(Pauli::Minus), s1, n);
  const Operator m2 = embed(pauli(Pauli::Minus), s2, n);

  AlphabetTerms t;
  t.a_term = (al.z() * am.z()) * z1 * z2;

  // The antisymmetric line is anti-Hermitian as an operator, so its real
  // prefactor carries an i to keep the flip-flop term Hermitian.
  t.b_term = (al.x() * am.x() + al.y() * am.y()) * (p1 * m2 + m1 * p2) +
             i * (al.x() * am.y() - al.y() * am.x()) * (p1 * m2 - m1 * p2);

  // The second line is the antisymmetric single-quantum correction. A pair
  // of purely-z hyperfine vectors must leave only the zz term, which pins
  // every prefactor product here to one transverse and one z component.
  t.c_term = (al.x() * am.z() - i * al.y() * am.z()) * (p1 * z2 + z1 * p2) +
             (al.z() * am.x() - al.x() * am.z() - i * al.z() * am.y() + i * al.y() * am.z()) *
                 z1 * p2;

  t.e_term = (al.x() * am.x() - al.y() * am.y() - i * al.x() * am.y() - i * al.y() * am.x()) *
             p1 * p2;

  t.d_term = t.c_term.adjoint();
  t.f_term = t.e_term.adjoint();
  return t;
}

Operator induced_pair_coupling(const SystemSpec& spec, int l, int m) {
  check_pair_index(spec, l);
  check_pair_index(spec, m);
  return site_vector_coupling(spec, spec.hyperfine[l], spec.nuclear_site(0, l)) *
         site_vector_coupling(spec, spec.hyperfine[m], spec.nuclear_site(1, m));
}

std::pair<Operator, Operator> split_parallel_cross(const SystemSpec& spec) {
  Operator parallel = Operator::Zero(spec.dim(), spec.dim());
  Operator cross = Operator::Zero(spec.dim(), spec.dim());
  for (int l = 0; l < spec.k; ++l) {
    for (int m = 0; m < spec.k; ++m) {
      const Operator h = induced_pair_coupling(spec, l, m);
      (l == m ? parallel : cross) += h;
    }
  }
  return {parallel, cross};
}

InversionPattern inversion_pattern(int k) {
  if (k < 1) throw std::invalid_argument("inversion_pattern: k must be >= 1");
  int order = 1;
  while (order < k) order *= 2;

  // Sylvester construction: H_{2n} = [[H, H], [H, -H]].
  std::vector<std::vector<int>> had(1, std::vector<int>(1, 1));
  for (int size = 1; size < order; size *= 2) {
    std::vector<std::vector<int>> next(2 * size, std::vector<int>(2 * size));
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        next[r][c] = had[r][c];
        next[r][c + size] = had[r][c];
        next[r + size][c] = had[r][c];
        next[r + size][c + size] = -had[r][c];
      }
    }
    had = std::move(next);
  }

  InversionPattern pattern;
  pattern.cycles.reserve(order);
  for (int r = 0; r < order; ++r)
    pattern.cycles.emplace_back(had[r].begin(), had[r].begin() + k);
  return pattern;
}

Operator inversion_unitary(const SystemSpec& spec, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != spec.k)
    throw std::invalid_argument("inversion_unitary: sign vector has " +
                                std::to_string(signs.size()) + " entries but k = " +
                                std::to_string(spec.k));
  const int n = spec.site_count();
  Operator u = identity_op(spec.dim());
  for (int j = 0; j < spec.k; ++j) {
    if (signs[j] != -1) continue;
    Eigen::Vector3d axis = spec.hyperfine[j].cross(Eigen::Vector3d::UnitZ());
    if (axis.norm() < 1e-14 * std::max(1.0, spec.hyperfine[j].norm()))
      axis = Eigen::Vector3d::UnitX();
    axis.normalize();
    // exp(-i (pi/2) n.sigma) = -i n.sigma for unit n.
    const Eigen::Matrix2cd rot =
        cplx(0.0, -1.0) * (axis.x() * pauli(Pauli::X) + axis.y() * pauli(Pauli::Y) +
                           axis.z() * pauli(Pauli::Z));
    u = u * embed(rot, spec.nuclear_site(0, j), n) * embed(rot, spec.nuclear_site(1, j), n);
  }
  return u;
}

Operator refocused_average(const SystemSpec& spec, const InversionPattern& pattern) {
  if (pattern.cycles.empty())
    throw std::invalid_argument("refocused_average: pattern has no cycles");
  Operator h = Operator::Zero(spec.dim(), spec.dim());
  for (int l = 0; l < spec.k; ++l)
    for (int m = 0; m < spec.k; ++m) h += induced_pair_coupling(spec, l, m);

  Operator avg = Operator::Zero(spec.dim(), spec.dim());
  for (const auto& signs : pattern.cycles) {
    const Operator p = inversion_unitary(spec, signs);
    avg += p * h * p.adjoint();
  }
  return avg / static_cast<double>(pattern.cycles.size());
}

}  // namespace wqc
