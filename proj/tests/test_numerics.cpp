#include <doctest.h>

#include <numbers>
#include <random>

#include "test_helpers.hpp"
#include "wqc/numerics.hpp"

using namespace wqc;
using test::max_abs_diff;
using test::random_hermitian;
using test::random_matrix;

TEST_SUITE_BEGIN("numerics");

TEST_CASE("pauli operators in the fixed basis") {
  Eigen::Matrix2cd sx;
  sx << 0, 1, 1, 0;
  CHECK(max_abs_diff(pauli(Pauli::X), sx) == 0.0);

  // sigma_plus = sigma_x + i sigma_y
  Eigen::Matrix2cd sp;
  sp << 0, 2, 0, 0;
  CHECK(max_abs_diff(pauli(Pauli::Plus), sp) == 0.0);
  CHECK(max_abs_diff(pauli("plus"), sp) == 0.0);

  Eigen::Matrix2cd em;
  em << 0, 0, 0, 1;
  CHECK(max_abs_diff(pauli(Pauli::EMinus), em) == 0.0);

  CHECK(max_abs_diff(pauli(Pauli::EPlus) + pauli(Pauli::EMinus), pauli(Pauli::Identity)) == 0.0);
  CHECK_THROWS_AS(pauli("w"), std::invalid_argument);
}

TEST_CASE("embed places a qubit operator at one site") {
  const Operator zi = embed(pauli(Pauli::Z), 0, 2);
  CHECK(max_abs_diff(zi, kron(pauli(Pauli::Z), pauli(Pauli::Identity))) == 0.0);

  CHECK(max_abs_diff(embed(pauli(Pauli::Identity), 2, 4), identity_op(16)) == 0.0);

  // sigma_x on site 1 maps |00> to |01>
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = 1.0;
  const Eigen::VectorXcd w = embed(pauli(Pauli::X), 1, 2) * v;
  CHECK(std::abs(w(1) - 1.0) == 0.0);
  CHECK(w.cwiseAbs().sum() == 1.0);

  CHECK_THROWS_AS(embed(pauli(Pauli::X), 2, 2), std::invalid_argument);
}

TEST_CASE("commutator basics") {
  const cplx i(0, 1);
  CHECK(max_abs_diff(commutator(pauli(Pauli::X), pauli(Pauli::Y)),
                     Operator(2.0 * i * pauli(Pauli::Z))) < 1e-15);

  std::mt19937 rng(11);
  const Operator a = random_matrix(6, rng);
  CHECK(commutator(a, a).cwiseAbs().maxCoeff() == 0.0);

  const Operator zi = embed(pauli(Pauli::Z), 0, 2);
  const Operator iz = embed(pauli(Pauli::Z), 1, 2);
  CHECK(commutator(zi, iz).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(commutator(a, identity_op(4)), std::invalid_argument);
}

TEST_CASE("expm identities") {
  CHECK(max_abs_diff(expm(Operator::Zero(5, 5)), identity_op(5)) == 0.0);

  const cplx i(0, 1);
  const Operator u = expm(i * std::numbers::pi / 2.0 * pauli(Pauli::X));
  CHECK(max_abs_diff(u, Operator(i * pauli(Pauli::X))) < 1e-14);

  Operator d = Operator::Zero(2, 2);
  d(0, 0) = cplx(0.3, -0.4);
  d(1, 1) = cplx(-1.1, 2.2);
  const Operator e = expm(d);
  CHECK(std::abs(e(0, 0) - std::exp(d(0, 0))) < 1e-15);
  CHECK(std::abs(e(1, 1) - std::exp(d(1, 1))) < 1e-15);
  CHECK(std::abs(e(0, 1)) == 0.0);

  CHECK_THROWS_AS(expm(Operator::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("expm of -iHt is unitary for random Hermitian H") {
  std::mt19937 rng(5);
  const cplx i(0, 1);
  for (int d : {2, 4, 8}) {
    for (double t : {0.1, 1.0, 10.0}) {
      const Operator h = random_hermitian(d, rng);
      const Operator u = expm(-i * t * h);
      CHECK(max_abs_diff(u * u.adjoint(), identity_op(d)) < 1e-12);
    }
  }
}

TEST_CASE("expm stays accurate at large norm") {
  // exp(i theta sigma_x) = cos(theta) I + i sin(theta) sigma_x, theta = 1000
  const double theta = 1000.0;
  const cplx i(0, 1);
  const Operator u = expm(i * theta * pauli(Pauli::X));
  const Operator want = std::cos(theta) * identity_op(2) +
                        i * std::sin(theta) * Operator(pauli(Pauli::X));
  CHECK(max_abs_diff(u, want) < 1e-12);
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(pauli(Pauli::Z)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(spectral_norm(Operator::Zero(3, 3)) == 0.0);

  // 2 ZZ - XX - YY on two qubits has spectrum {2, 2, 0, -4}.
  const Operator m = 2.0 * embed(pauli(Pauli::Z), 0, 2) * embed(pauli(Pauli::Z), 1, 2) -
                     embed(pauli(Pauli::X), 0, 2) * embed(pauli(Pauli::X), 1, 2) -
                     embed(pauli(Pauli::Y), 0, 2) * embed(pauli(Pauli::Y), 1, 2);
  CHECK(spectral_norm(m) == doctest::Approx(4.0).epsilon(1e-13));

  // eigen-decomposition oracle
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  CHECK(es.eigenvalues().cwiseAbs().maxCoeff() == doctest::Approx(spectral_norm(m)).epsilon(1e-13));

  CHECK(matrix_norm(m, MatrixNorm::Frobenius) == doctest::Approx(m.norm()));
}

TEST_CASE("vec stacks columns") {
  Operator rho(2, 2);
  rho << cplx(1, 0), cplx(3, 0), cplx(2, 0), cplx(4, 0);  // [[a, c], [b, d]]
  const Eigen::VectorXcd v = vec(rho);
  CHECK(v(0) == cplx(1, 0));
  CHECK(v(1) == cplx(2, 0));
  CHECK(v(2) == cplx(3, 0));
  CHECK(v(3) == cplx(4, 0));

  CHECK_THROWS_AS(unvec(v, 3), std::invalid_argument);
}

TEST_CASE("vec/unvec roundtrip and the kron identity") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + (trial % 3);
    const Operator a = random_matrix(d, rng);
    const Operator b = random_matrix(d, rng);
    const Operator rho = random_matrix(d, rng);
    CHECK(max_abs_diff(unvec(vec(rho), d), rho) == 0.0);
    // (B^T (x) A) vec(rho) = vec(A rho B)
    const Eigen::VectorXcd lhs = kron(Operator(b.transpose()), a) * vec(rho);
    CHECK((lhs - vec(Operator(a * rho * b))).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("hermiticity detector") {
  std::mt19937 rng(3);
  CHECK(is_hermitian(random_hermitian(5, rng)));
  Operator m = random_hermitian(5, rng);
  m(1, 2) += cplx(0.0, 1e-6);
  CHECK_FALSE(is_hermitian(m));
}

TEST_SUITE_END();
