#include "wqc/numerics.hpp"

#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace wqc {

Eigen::Matrix2cd pauli(Pauli axis) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  const cplx i(0.0, 1.0);
  switch (axis) {
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -i, i, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
    case Pauli::Plus:  // sigma_x + i sigma_y
      m << 0, 2, 0, 0;
      break;
    case Pauli::Minus:  // sigma_x - i sigma_y
      m << 0, 0, 2, 0;
      break;
    case Pauli::Identity:
      m.setIdentity();
      break;
    case Pauli::EPlus:  // |0><0|
      m << 1, 0, 0, 0;
      break;
    case Pauli::EMinus:  // |1><1|
      m << 0, 0, 0, 1;
      break;
  }
  return m;
}

Eigen::Matrix2cd pauli(std::string_view name) {
  if (name == "x") return pauli(Pauli::X);
  if (name == "y") return pauli(Pauli::Y);
  if (name == "z") return pauli(Pauli::Z);
  if (name == "plus") return pauli(Pauli::Plus);
  if (name == "minus") return pauli(Pauli::Minus);
  if (name == "identity") return pauli(Pauli::Identity);
  if (name == "e_plus") return pauli(Pauli::EPlus);
  if (name == "e_minus") return pauli(Pauli::EMinus);
  throw std::invalid_argument("pauli: unknown axis label '" + std::string(name) + "'");
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Operator embed(const Eigen::Matrix2cd& op, int site, int n_sites) {
  if (site < 0 || site >= n_sites)
    throw std::invalid_argument("embed: site " + std::to_string(site) +
                                " out of range for " + std::to_string(n_sites) + " sites");
  const auto left = Eigen::Index(1) << site;
  const auto right = Eigen::Index(1) << (n_sites - site - 1);
  Operator out = kron(Operator(Eigen::MatrixXcd::Identity(left, left)), Operator(op));
  return kron(out, Operator(Eigen::MatrixXcd::Identity(right, right)));
}

Operator commutator(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("commutator: dimension mismatch");
  return a * b - b * a;
}

Operator expm(const Operator& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("expm: matrix must be square");
  if (!m.allFinite()) throw std::invalid_argument("expm: matrix has non-finite entries");
  return m.exp();
}

Operator logm(const Operator& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("logm: matrix must be square");
  return m.log();
}

double spectral_norm(const Operator& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double matrix_norm(const Operator& m, MatrixNorm kind) {
  switch (kind) {
    case MatrixNorm::Spectral:
      return spectral_norm(m);
    case MatrixNorm::Frobenius:
      return m.norm();
  }
  return 0.0;
}

Eigen::VectorXcd vec(const Operator& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("vec: matrix must be square");
  return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

Operator unvec(const Eigen::VectorXcd& v, int d) {
  if (v.size() != Eigen::Index(d) * d)
    throw std::invalid_argument("unvec: length " + std::to_string(v.size()) +
                                " does not match dimension " + std::to_string(d));
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), d, d);
}

bool is_hermitian(const Operator& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.norm());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

Operator identity_op(int dim) { return Eigen::MatrixXcd::Identity(dim, dim); }

}  // namespace wqc
