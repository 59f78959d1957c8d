#ifndef EETSIM_DENSITY_MATRIX_HPP
#define EETSIM_DENSITY_MATRIX_HPP

#include <stdexcept>

#include "eetsim/channels.hpp"
#include "eetsim/gates.hpp"
#include "eetsim/pauli.hpp"

namespace eetsim::qsim {

inline constexpr int kMaxQubits = 10;

// Dense density matrix over the n-qubit computational basis (little-endian:
// basis index = sum_q bit(q) << q).
struct DensityMatrix {
  int n_qubits = 0;
  Matrix data;

  static DensityMatrix zero_state(int n_qubits) {
    check_size(n_qubits);
    DensityMatrix rho;
    rho.n_qubits = n_qubits;
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    rho.data = Matrix::Zero(dim, dim);
    rho.data(0, 0) = 1.0;
    return rho;
  }

  static DensityMatrix basis_state(int n_qubits, Eigen::Index index) {
    DensityMatrix rho = zero_state(n_qubits);
    rho.data(0, 0) = 0.0;
    rho.data(index, index) = 1.0;
    return rho;
  }

  Eigen::Index dim() const { return data.rows(); }
  double trace_real() const { return data.trace().real(); }

  double hermiticity_defect() const {
    return (data - data.adjoint()).cwiseAbs().maxCoeff();
  }

  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(
        0.5 * (data + Matrix(data.adjoint())), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

 private:
  static void check_size(int n) {
    if (n < 1 || n > kMaxQubits)
      throw std::invalid_argument("DensityMatrix: qubit count outside 1..10");
  }
};

// rho -> U rho U^dag
inline DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g) {
  const Matrix u = embed_unitary(g, rho.n_qubits);
  DensityMatrix out = rho;
  out.data = u * rho.data * u.adjoint();
  return out;
}

// rho -> sum_k K rho K^dag with the channel embedded on `qubits`
// (qubits[j] carries local bit j).
inline DensityMatrix apply_channel(const DensityMatrix& rho,
                                   const KrausChannel& ch,
                                   const std::vector<int>& qubits) {
  ch.validate();
  if (static_cast<int>(qubits.size()) != ch.arity())
    throw std::invalid_argument("apply_channel: qubit list does not match arity");
  DensityMatrix out = rho;
  out.data = Matrix::Zero(rho.dim(), rho.dim());
  Gate carrier;
  carrier.kind = GateKind::Unitary;
  carrier.qubits = qubits;
  for (const Matrix& k : ch.operators) {
    carrier.custom = k;
    const Matrix kf = embed_unitary(carrier, rho.n_qubits);
    out.data += kf * rho.data * kf.adjoint();
  }
  return out;
}

}  // namespace eetsim::qsim

#endif
