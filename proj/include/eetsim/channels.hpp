#ifndef EETSIM_CHANNELS_HPP
#define EETSIM_CHANNELS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "eetsim/pauli.hpp"

namespace eetsim::qsim {

// A CPTP map as a set of Kraus operators of equal (local) dimension.
struct KrausChannel {
  std::vector<Matrix> operators;

  int arity() const {
    Eigen::Index d = operators.empty() ? 1 : operators.front().rows();
    int n = 0;
    while (d > 1) { d /= 2; ++n; }
    return n;
  }

  // max |(sum K^dag K - I)_{ij}|
  double completeness_defect() const {
    if (operators.empty()) return 1.0;
    const Eigen::Index d = operators.front().rows();
    Matrix acc = Matrix::Zero(d, d);
    for (const Matrix& k : operators) acc += k.adjoint() * k;
    return (acc - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  }

  void validate(double tol = 1e-12) const {
    if (operators.empty())
      throw std::invalid_argument("Kraus channel has no operators");
    const Eigen::Index d = operators.front().rows();
    for (const Matrix& k : operators)
      if (k.rows() != d || k.cols() != d)
        throw std::invalid_argument("Kraus operators differ in dimension");
    if (completeness_defect() > tol)
      throw std::invalid_argument("Kraus set violates completeness");
  }
};

namespace channels {

// rho -> (1-p) rho + p I/2; fully mixing at p = 1.
inline KrausChannel depolarizing1(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("depolarizing1: p outside [0,1]");
  KrausChannel ch;
  ch.operators.push_back(std::sqrt(1.0 - 0.75 * p) * pauli::identity2());
  for (int i = 1; i < 4; ++i)
    ch.operators.push_back(std::sqrt(0.25 * p) * pauli::by_index(i));
  return ch;
}

// rho -> (1-p) rho + p I/4 on a qubit pair; uniform over the 15 non-identity
// Pauli pairs. Local bit 0 = first listed qubit.
inline KrausChannel depolarizing2(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("depolarizing2: p outside [0,1]");
  KrausChannel ch;
  ch.operators.push_back(std::sqrt(1.0 - 15.0 * p / 16.0) *
                         Matrix::Identity(4, 4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == 0 && b == 0) continue;
      ch.operators.push_back(std::sqrt(p / 16.0) *
                             kron(pauli::by_index(a), pauli::by_index(b)));
    }
  return ch;
}

// Phase flip: rho -> (1-p) rho + p Z rho Z.
inline KrausChannel dephasing(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("dephasing: p outside [0,1]");
  KrausChannel ch;
  ch.operators.push_back(std::sqrt(1.0 - p) * pauli::identity2());
  ch.operators.push_back(std::sqrt(p) * pauli::z());
  return ch;
}

inline KrausChannel amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("amplitude_damping: gamma outside [0,1]");
  Matrix k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  KrausChannel ch;
  ch.operators = {k0, k1};
  return ch;
}

}  // namespace channels
}  // namespace eetsim::qsim

#endif
