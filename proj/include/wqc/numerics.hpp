#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace wqc {

using cplx = std::complex<double>;

// Dense complex matrix on a labeled tensor-product Hilbert space.
using Operator = Eigen::MatrixXcd;

// Dense complex matrix on Liouville space (column-stacking convention).
// May be rectangular for preparation / partial-trace maps.
using SuperOp = Eigen::MatrixXcd;

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Single-qubit operators in the fixed basis {|0>, |1>}, where |0> is the
// +1 eigenvector of sigma_z. sigma_plus/minus follow the sigma_x +- i sigma_y
// convention (entries 0 and 2, not 0 and 1).
enum class Pauli { X, Y, Z, Plus, Minus, Identity, EPlus, EMinus };

Eigen::Matrix2cd pauli(Pauli axis);
Eigen::Matrix2cd pauli(std::string_view name);

// Kronecker product, row-major tensor ordering: site 0 is the leftmost
// (most significant) factor.
Operator kron(const Operator& a, const Operator& b);

// op on `site`, identity elsewhere; result acts on 2^n_sites dimensions.
Operator embed(const Eigen::Matrix2cd& op, int site, int n_sites);

Operator commutator(const Operator& a, const Operator& b);

// Matrix exponential (scaling-and-squaring Pade). Relative accuracy ~1e-12
// for norms up to ~1e3, which covers every generator in this library.
Operator expm(const Operator& m);

// Principal matrix logarithm; used by the sequence-suppression diagnostics.
Operator logm(const Operator& m);

enum class MatrixNorm { Spectral, Frobenius };

// Largest singular value.
double spectral_norm(const Operator& m);
double matrix_norm(const Operator& m, MatrixNorm kind);

// Column stacking: entry (i, j) lands at position j*d + i, so that
// kron(B.transpose(), A) * vec(rho) == vec(A * rho * B).
Eigen::VectorXcd vec(const Operator& rho);
Operator unvec(const Eigen::VectorXcd& v, int d);

bool is_hermitian(const Operator& m, double tol = 1e-12);

Operator identity_op(int dim);

}  // namespace wqc
