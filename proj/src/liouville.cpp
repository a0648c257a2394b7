#include "wqc/liouville.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace wqc {

namespace {

SuperOp assemble_dissipator(const Operator& raise_full, const Operator& excited_proj_full,
                            double gamma1, double gamma2) {
  const auto dim = raise_full.rows();
  const Operator id = identity_op(static_cast<int>(dim));
  const Operator lower_full = raise_full.adjoint();
  return gamma1 * sandwich_superop(raise_full, lower_full) +
         gamma2 * sandwich_superop(excited_proj_full, excited_proj_full) -
         0.5 * (gamma1 + gamma2) *
             (sandwich_superop(excited_proj_full, id) + sandwich_superop(id, excited_proj_full));
}

}  // namespace

std::pair<double, double> gammas_from_times(const NoiseParams& noise) {
  if (!(noise.t1 > 0.0) || !(noise.t2 > 0.0))
    throw std::domain_error("gammas_from_times: relaxation times must be positive");
  if (noise.t2 > 2.0 * noise.t1)
    throw std::domain_error("gammas_from_times: t2 = " + std::to_string(noise.t2) +
                            " exceeds 2*t1 = " + std::to_string(2.0 * noise.t1) +
                            " (negative Gamma_2)");
  return {1.0 / noise.t1, (2.0 * noise.t1 - noise.t2) / (noise.t1 * noise.t2)};
}

SuperOp liouvillian(const Operator& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("liouvillian: matrix must be square");
  const Operator id = identity_op(static_cast<int>(h.rows()));
  return kron(id, h) - kron(Operator(h.transpose()), id);
}

SuperOp sandwich_superop(const Operator& a, const Operator& b) {
  return kron(Operator(b.transpose()), a);
}

SuperOp conjugation_superop(const Operator& u) {
  return kron(Operator(u.conjugate()), u);
}

SuperOp qubit_dissipator(double gamma1, double gamma2) {
  if (gamma1 < 0.0 || gamma2 < 0.0)
    throw std::invalid_argument("qubit_dissipator: rates must be nonnegative");
  const Operator raise = 0.5 * (pauli(Pauli::X) + cplx(0.0, 1.0) * pauli(Pauli::Y));  // |0><1|
  return assemble_dissipator(raise, Operator(pauli(Pauli::EMinus)), gamma1, gamma2);
}

SuperOp electron_dissipator(const DissipatorParams& params, const SystemSpec& spec) {
  if (params.electron_index != 1 && params.electron_index != 2)
    throw std::invalid_argument("electron_dissipator: electron_index must be 1 or 2");
  if (params.gamma1 < 0.0 || params.gamma2 < 0.0)
    throw std::invalid_argument("electron_dissipator: rates must be nonnegative");
  const int site = spec.electron_site(params.electron_index - 1);
  const int n = spec.site_count();
  const Eigen::Matrix2cd raise =
      0.5 * (pauli(Pauli::X) + cplx(0.0, 1.0) * pauli(Pauli::Y));
  return assemble_dissipator(embed(raise, site, n), embed(pauli(Pauli::EMinus), site, n),
                             params.gamma1, params.gamma2);
}

SuperOp prep_superop(const SystemSpec& spec) {
  const int dn = spec.nuclear_dim();
  const int df = spec.dim();
  // Electron pair |down,down> = |11>, basis index 3.
  const int g = 3;
  SuperOp s = SuperOp::Zero(Eigen::Index(df) * df, Eigen::Index(dn) * dn);
  for (int j = 0; j < dn; ++j)
    for (int i = 0; i < dn; ++i)
      s(Eigen::Index(g * dn + j) * df + (g * dn + i), Eigen::Index(j) * dn + i) = 1.0;
  return s;
}

SuperOp trace_superop(const SystemSpec& spec) {
  const int dn = spec.nuclear_dim();
  const int df = spec.dim();
  SuperOp s = SuperOp::Zero(Eigen::Index(dn) * dn, Eigen::Index(df) * df);
  for (int a = 0; a < 4; ++a)
    for (int j = 0; j < dn; ++j)
      for (int i = 0; i < dn; ++i)
        s(Eigen::Index(j) * dn + i, Eigen::Index(a * dn + j) * df + (a * dn + i)) = 1.0;
  return s;
}

SuperOp channel_superop(const PulseSequence& seq, const SystemSpec& spec,
                        const std::optional<NoiseParams>& noise, bool with_microwave) {
  const int df = spec.dim();
  const Eigen::Index ld = Eigen::Index(df) * df;

  SuperOp dissipators;
  if (noise) {
    const auto [g1, g2] = gammas_from_times(*noise);
    dissipators = electron_dissipator({g1, g2, 1}, spec) + electron_dissipator({g1, g2, 2}, spec);
  }
  SuperOp mw;
  if (with_microwave) mw = liouvillian(build_microwave(spec));

  std::map<Generator, SuperOp> gen_liouvillians;
  const auto gen_liouvillian = [&](Generator g) -> const SuperOp& {
    auto it = gen_liouvillians.find(g);
    if (it == gen_liouvillians.end())
      it = gen_liouvillians.emplace(g, liouvillian(generator_hamiltonian(g, spec))).first;
    return it->second;
  };

  std::map<std::tuple<Generator, int, bool, double>, SuperOp> segment_cache;
  SuperOp product = SuperOp::Identity(ld, ld);
  const cplx mi(0.0, -1.0);
  for (const auto& seg : seq.segments) {
    if (!(seg.duration > 0.0))
      throw std::invalid_argument("channel_superop: segment duration must be positive");
    const bool noisy = noise.has_value() && seg.with_noise;
    const auto key = std::make_tuple(seg.generator, seg.sign, noisy, seg.duration);
    auto it = segment_cache.find(key);
    if (it == segment_cache.end()) {
      SuperOp gen = mi * static_cast<double>(seg.sign) * gen_liouvillian(seg.generator);
      if (with_microwave) gen += mi * mw;
      if (noisy) gen += dissipators;
      it = segment_cache.emplace(key, expm(seg.duration * gen)).first;
    }
    product = product * it->second;
  }
  return trace_superop(spec) * product * prep_superop(spec);
}

Operator choi_matrix(const SuperOp& s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("choi_matrix: superoperator not square");
  const int d2 = static_cast<int>(s.rows());
  const int d = static_cast<int>(std::lround(std::sqrt(double(d2))));
  if (Eigen::Index(d) * d != s.rows())
    throw std::invalid_argument("choi_matrix: dimension is not a perfect square");
  Operator c(d2, d2);
  // C[(a d + i), (b d + j)] = S[(j d + i), (b d + a)]
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int b = 0; b < d; ++b)
        for (int j = 0; j < d; ++j)
          c(Eigen::Index(a) * d + i, Eigen::Index(b) * d + j) =
              s(Eigen::Index(j) * d + i, Eigen::Index(b) * d + a);
  return c;
}

}  // namespace wqc
