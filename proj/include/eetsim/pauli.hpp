#ifndef EETSIM_PAULI_HPP
#define EETSIM_PAULI_HPP

#include <Eigen/Dense>
#include <complex>

namespace eetsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace pauli {

inline Matrix identity2() { return Matrix::Identity(2, 2); }

inline Matrix x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Matrix z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// 0 -> I, 1 -> X, 2 -> Y, 3 -> Z
inline Matrix by_index(int i) {
  switch (i) {
    case 0: return identity2();
    case 1: return x();
    case 2: return y();
    default: return z();
  }
}

inline char label(int i) { return "IXYZ"[i]; }

}  // namespace pauli

// Kronecker product; with the little-endian qubit convention used here,
// kron(A_q1, B_q0) acts as A on qubit 1 and B on qubit 0.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Frobenius distance from the identity, minimized over a global phase.
inline double distance_from_identity(const Matrix& u) {
  const Complex tr = u.trace();
  const double n = static_cast<double>(u.rows());
  const double d2 = 2.0 * n - 2.0 * std::abs(tr);
  return d2 > 0.0 ? std::sqrt(d2) : 0.0;
}

}  // namespace eetsim

#endif
