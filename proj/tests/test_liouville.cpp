#include <doctest.h>

#include <cmath>
#include <random>

#include "test_helpers.hpp"
#include "wqc/analysis.hpp"
#include "wqc/liouville.hpp"

using namespace wqc;
using test::max_abs_diff;
using test::random_matrix;

TEST_SUITE_BEGIN("liouville");

TEST_CASE("relaxation rates from T1/T2") {
  const auto [g1a, g2a] = gammas_from_times({2.5, 2.5});
  CHECK(g1a == doctest::Approx(1.0 / 2.5));
  CHECK(g2a == doctest::Approx(1.0 / 2.5));

  const auto [g1b, g2b] = gammas_from_times({100e-6, 50e-6});
  CHECK(g1b == doctest::Approx(1e4));
  CHECK(g2b == doctest::Approx(3e4));

  const auto [g1c, g2c] = gammas_from_times({1e30, 0.5});
  CHECK(g1c == doctest::Approx(0.0));
  CHECK(g2c == doctest::Approx(2.0 / 0.5).epsilon(1e-12));

  CHECK_THROWS_AS(gammas_from_times({1.0, 2.5}), std::domain_error);
  CHECK_THROWS_AS(gammas_from_times({0.0, 1.0}), std::domain_error);
}

TEST_CASE("liouvillian of sigma_z is diagonal in the stacking basis") {
  const SuperOp l = liouvillian(pauli(Pauli::Z));
  Eigen::Vector4cd want(0.0, -2.0, 2.0, 0.0);
  CHECK(max_abs_diff(l, Operator(want.asDiagonal())) == 0.0);
  CHECK(liouvillian(identity_op(4)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("liouvillian implements the commutator on vectorized states") {
  std::mt19937 rng(67);
  for (int d : {2, 4, 8, 16}) {
    const Operator h = test::random_hermitian(d, rng);
    const SuperOp l = liouvillian(h);
    const Operator rho = random_matrix(d, rng);
    const Eigen::VectorXcd lhs = l * vec(rho);
    const Eigen::VectorXcd rhs = vec(Operator(h * rho - rho * h));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13 * h.norm() * rho.norm());
  }
}

TEST_CASE("qubit dissipator reproduces the T1/T2 decays") {
  // This is the convention-pinning test: a transposed embedding would decay
  // the wrong population or produce growing coherences.
  Operator rho0(2, 2);
  rho0 << 0.3, cplx(0.2, -0.1), cplx(0.2, 0.1), 0.7;
  for (const auto& [t1, t2] : std::initializer_list<std::pair<double, double>>{
           {1.0, 1.0}, {1.0, 0.5}, {1.0, 2.0}}) {
    const auto [g1, g2] = gammas_from_times({t1, t2});
    const SuperOp d = qubit_dissipator(g1, g2);
    for (int i = 1; i <= 50; ++i) {
      const double t = 5.0 * t1 * i / 50.0;
      const Operator rho = unvec(expm(t * d) * vec(rho0), 2);
      CHECK(rho(1, 1).real() ==
            doctest::Approx(0.7 * std::exp(-t / t1)).epsilon(1e-8));
      CHECK(std::abs(rho(0, 1) - rho0(0, 1) * std::exp(-t / t2)) <=
            1e-8 * std::abs(rho0(0, 1)));
      CHECK(std::abs(rho.trace() - cplx(1.0, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("dissipator edge cases") {
  const SystemSpec spec = SystemSpec::defaults(1);
  CHECK(electron_dissipator({0.0, 0.0, 1}, spec).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(electron_dissipator({1.0, 1.0, 3}, spec), std::invalid_argument);
  CHECK_THROWS_AS(electron_dissipator({-1.0, 1.0, 1}, spec), std::invalid_argument);

  // the identity row is a left null vector: trace preservation of e^{tD}
  const SuperOp d = electron_dissipator({2.0, 3.0, 2}, spec);
  const Eigen::VectorXcd vi = vec(identity_op(spec.dim()));
  CHECK((vi.adjoint() * d).cwiseAbs().maxCoeff() < 1e-13 * d.cwiseAbs().maxCoeff());
}

TEST_CASE("preparation and trace superoperators") {
  const SystemSpec spec = SystemSpec::defaults(1);
  const SuperOp prep = prep_superop(spec);
  const SuperOp tr = trace_superop(spec);
  CHECK(prep.rows() == 256);
  CHECK(prep.cols() == 16);
  CHECK(tr.rows() == 16);
  CHECK(tr.cols() == 256);

  CHECK(max_abs_diff(tr * prep, identity_op(16)) == 0.0);

  // preparing the maximally mixed nuclear state puts all electron
  // population on |down,down> (sigma_z expectation -1 on both electrons)
  const Eigen::VectorXcd rho_full = prep * vec(Operator(0.25 * identity_op(4)));
  const Operator rho = unvec(rho_full, 16);
  CHECK(std::abs(rho.trace() - cplx(1, 0)) < 1e-14);
  const Operator ez1 = embed(pauli(Pauli::Z), 0, 4);
  const Operator ez2 = embed(pauli(Pauli::Z), 1, 4);
  CHECK((ez1 * rho).trace().real() == doctest::Approx(-1.0));
  CHECK((ez2 * rho).trace().real() == doctest::Approx(-1.0));

  // partial trace preserves the trace and kills electron-off-diagonal blocks
  std::mt19937 rng(71);
  const Operator rho_n = random_matrix(4, rng);
  const Operator full = kron(pauli(Pauli::EMinus), kron(pauli(Pauli::EMinus), rho_n));
  CHECK(max_abs_diff(unvec(tr * vec(full), 4), rho_n) < 1e-14);

  Operator offdiag = Operator::Zero(4, 4);
  offdiag(1, 2) = 1.0;  // |up,down><down,up|
  const Operator off_full = kron(offdiag, rho_n);
  CHECK((tr * vec(off_full)).cwiseAbs().maxCoeff() == 0.0);

  const Operator any_full = random_matrix(16, rng);
  CHECK(std::abs(unvec(tr * vec(any_full), 4).trace() - any_full.trace()) < 1e-13);
}

TEST_CASE("noiseless serial channel equals SWAP conjugation") {
  const SystemSpec spec = SystemSpec::defaults(1);
  const SuperOp chan = channel_superop(serial_swap_sequence(spec), spec, std::nullopt, false);
  Operator swap_n = Operator::Zero(4, 4);
  swap_n(0, 0) = swap_n(3, 3) = swap_n(1, 2) = swap_n(2, 1) = 1.0;
  CHECK(max_abs_diff(chan, conjugation_superop(swap_n)) < 1e-10);
}

TEST_CASE("assembled channels are trace preserving and completely positive") {
  const SystemSpec spec = SystemSpec::defaults(1);
  const NoiseParams noise{5e-5, 2e-5};
  for (const bool microwave : {false, true}) {
    for (const auto* noise_ptr : {static_cast<const NoiseParams*>(nullptr), &noise}) {
      const SuperOp chan = channel_superop(
          bch_sequence(select_tau(spec)), spec,
          noise_ptr ? std::optional<NoiseParams>(*noise_ptr) : std::nullopt, microwave);
      const CptpReport rep = cptp_report(chan);
      CHECK(rep.trace_residual <= 1e-10);
      CHECK(rep.choi_min_eigenvalue >= -1e-10);
      CHECK(rep.hermiticity_residual <= 1e-10);
    }
  }
}

TEST_CASE("channels stay CPTP for random systems and noise") {
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> ud(0.2, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    SystemSpec spec;
    spec.k = 1;
    spec.hyperfine = {Eigen::Vector3d(ud(rng) - 0.6, ud(rng) - 0.6, ud(rng))};
    spec.nuclear_zeeman = {ud(rng)};
    spec.dipolar = ud(rng);
    spec.rabi = ud(rng);
    const double t1 = std::pow(10.0, -1.0 - 2.0 * ud(rng));
    const NoiseParams noise{t1, 1.5 * t1};
    const SuperOp chan = channel_superop(bch_sequence(select_tau(spec)), spec, noise, true);
    const CptpReport rep = cptp_report(chan);
    CHECK(rep.trace_residual <= 1e-10);
    CHECK(rep.choi_min_eigenvalue >= -1e-10);
  }
}

TEST_CASE("channel edge cases") {
  const SystemSpec spec = SystemSpec::defaults(1);

  // empty segment list: prep then trace is the identity on the nuclei
  PulseSequence empty;
  empty.label = "empty";
  CHECK(max_abs_diff(channel_superop(empty, spec, std::nullopt, false), identity_op(16)) == 0.0);

  // noise-free limit matches the noiseless construction
  const PulseSequence seq = bch_sequence(select_tau(spec));
  const SuperOp ideal = channel_superop(seq, spec, std::nullopt, false);
  const SuperOp zero_noise = channel_superop(seq, spec, NoiseParams{1e30, 1e30}, false);
  CHECK(max_abs_diff(ideal, zero_noise) < 1e-12);

  CHECK_THROWS_AS(channel_superop(seq, spec, NoiseParams{1.0, 3.0}, false), std::domain_error);

  SystemSpec k2 = SystemSpec::defaults(2);
  CHECK_THROWS_AS(channel_superop(bch_sequence(1e-9), k2, std::nullopt, true),
                  std::invalid_argument);

  // segments flagged with_noise = false ignore the dissipator
  PulseSequence quiet = seq;
  for (auto& s : quiet.segments) s.with_noise = false;
  const SuperOp quiet_chan = channel_superop(quiet, spec, NoiseParams{1e-6, 1e-6}, false);
  CHECK(max_abs_diff(quiet_chan, ideal) < 1e-12);
}

TEST_CASE("choi matrix of a unitary channel is the projector onto its vec") {
  std::mt19937 rng(73);
  const Operator h = test::random_hermitian(4, rng);
  const Operator u = expm(cplx(0, -1) * h);
  const Operator choi = choi_matrix(conjugation_superop(u));
  // rank-one: C = vec'(U) vec'(U)^dag in the row-major pairing
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(choi);
  const auto evs = es.eigenvalues();
  CHECK(evs.maxCoeff() == doctest::Approx(4.0).epsilon(1e-12));
  for (int i = 0; i + 1 < evs.size(); ++i) CHECK(std::abs(evs(i)) < 1e-12);
}

TEST_SUITE_END();
