#ifndef EETSIM_EXCITON_HPP
#define EETSIM_EXCITON_HPP

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "eetsim/constants.hpp"
#include "eetsim/gates.hpp"
#include "eetsim/pauli.hpp"
#include "eetsim/trace.hpp"

namespace eetsim::exciton {

// Frenkel exciton model: site energies eps_i on the diagonal, excitonic
// couplings J_ij off it. Energies in cm^-1; site j maps to qubit j.
struct ExcitonSystem {
  int n_sites = 2;
  std::vector<double> site_energies_cm1;
  Eigen::MatrixXd couplings_cm1;

  static ExcitonSystem symmetric_dimer(double J0_cm1 = 100.0) {
    ExcitonSystem sys;
    sys.n_sites = 2;
    sys.site_energies_cm1 = {0.0, 0.0};
    sys.couplings_cm1 = Eigen::MatrixXd::Zero(2, 2);
    sys.couplings_cm1(0, 1) = sys.couplings_cm1(1, 0) = J0_cm1;
    return sys;
  }

  void validate() const {
    if (n_sites < 1) throw std::invalid_argument("exciton system: n_sites < 1");
    if (static_cast<int>(site_energies_cm1.size()) != n_sites)
      throw std::invalid_argument("exciton system: site energy count mismatch");
    if (couplings_cm1.rows() != n_sites || couplings_cm1.cols() != n_sites)
      throw std::invalid_argument("exciton system: coupling matrix shape mismatch");
    for (int i = 0; i < n_sites; ++i) {
      if (couplings_cm1(i, i) != 0.0)
        throw std::invalid_argument("exciton system: coupling diagonal must be zero");
      for (int j = 0; j < n_sites; ++j)
        if (couplings_cm1(i, j) != couplings_cm1(j, i))
          throw std::invalid_argument("exciton system: couplings not symmetric");
    }
  }
};

// One-exciton-manifold matrix: H[i][i] = eps_i, H[i][j] = J_ij  [cm^-1].
inline Eigen::MatrixXd build_one_exciton_hamiltonian(const ExcitonSystem& sys) {
  sys.validate();
  Eigen::MatrixXd h = sys.couplings_cm1;
  for (int i = 0; i < sys.n_sites; ++i) h(i, i) = sys.site_energies_cm1[i];
  return h;
}

// One term of a Pauli-operator sum: coefficient times a product of Paulis on
// distinct qubits. 'I' marks the identity contribution of a number operator.
struct PauliTerm {
  double coefficient = 0.0;
  std::vector<std::pair<int, char>> operators;
};

// Hard-core boson / Jordan-Wigner map of the exciton Hamiltonian:
//   a_n^dag a_n           -> (I_n - Z_n)/2
//   a_m^dag a_n + h.c.    -> (X_m X_n + Y_m Y_n)/2
// Coefficients keep the cm^-1 scale of the inputs (dimensionless if the
// caller pre-scales by J0). Zero terms are dropped, so the unit symmetric
// dimer maps to exactly { X1X2/2, Y1Y2/2 }.
inline std::vector<PauliTerm> jordan_wigner_map(const ExcitonSystem& sys) {
  sys.validate();
  std::vector<PauliTerm> terms;
  for (int i = 0; i < sys.n_sites; ++i) {
    const double eps = sys.site_energies_cm1[i];
    if (eps == 0.0) continue;
    terms.push_back({0.5 * eps, {{i, 'I'}}});
    terms.push_back({-0.5 * eps, {{i, 'Z'}}});
  }
  for (int i = 0; i < sys.n_sites; ++i)
    for (int j = i + 1; j < sys.n_sites; ++j) {
      const double J = sys.couplings_cm1(i, j);
      if (J == 0.0) continue;
      terms.push_back({0.5 * J, {{i, 'X'}, {j, 'X'}}});
      terms.push_back({0.5 * J, {{i, 'Y'}, {j, 'Y'}}});
    }
  return terms;
}

// Dense qubit-space matrix of a Pauli sum (for oracle comparisons).
inline Matrix pauli_sum_matrix(const std::vector<PauliTerm>& terms,
                               int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Matrix h = Matrix::Zero(dim, dim);
  for (const PauliTerm& t : terms) {
    Matrix factor = Matrix::Identity(1, 1);
    for (int q = n_qubits - 1; q >= 0; --q) {
      Matrix local = pauli::identity2();
      for (const auto& [tq, lab] : t.operators) {
        if (tq != q) continue;
        switch (lab) {
          case 'X': local = pauli::x(); break;
          case 'Y': local = pauli::y(); break;
          case 'Z': local = pauli::z(); break;
          default: break;  // 'I'
        }
      }
      factor = kron(factor, local);
    }
    h += t.coefficient * factor;
  }
  return h;
}

// Closed-system oracle: populations |<i| exp(-iH theta) |p0>|^2 by exact
// diagonalization. H and theta are dimensionless (H in units of J0, theta in
// units of 1/J0).
inline PopulationTrace reference_propagate(const Eigen::MatrixXd& h, int p0,
                                           const std::vector<double>& thetas,
                                           const EnergyScale& scale = {}) {
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("reference_propagate: Hamiltonian not symmetric");
  if (p0 < 0 || p0 >= h.rows())
    throw std::invalid_argument("reference_propagate: initial site out of range");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const Eigen::MatrixXd& v = es.eigenvectors();
  const Eigen::VectorXd& w = es.eigenvalues();
  const Eigen::VectorXd overlap0 = v.row(p0).transpose();

  PopulationTrace trace;
  trace.engine = "oracle";
  trace.renormalized = (h.rows() == 2);
  int step = 0;
  for (double theta : thetas) {
    Vector amps = Vector::Zero(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
      amps += std::exp(Complex(0.0, -w(k) * theta)) * overlap0(k) *
              v.col(k).cast<Complex>();
    const Eigen::VectorXd pops = amps.cwiseAbs2();
    trace.push_point(step, scale.time_fs(theta), theta, pops(0),
                     h.rows() > 1 ? pops(1) : 0.0, 0.0);
    ++step;
  }
  return trace;
}

// Total population of the oracle state (conservation check hook).
inline double oracle_population_sum(const Eigen::MatrixXd& h, int p0,
                                    double theta) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const Eigen::MatrixXd& v = es.eigenvectors();
  const Eigen::VectorXd& w = es.eigenvalues();
  Vector amps = Vector::Zero(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k)
    amps += std::exp(Complex(0.0, -w(k) * theta)) * v(p0, k) *
            v.col(k).cast<Complex>();
  return amps.cwiseAbs2().sum();
}

// Two-qubit circuit for exp(-i H theta), H = (X1 X2 + Y1 Y2)/2 (unit-scaled
// symmetric dimer). Exact because the XX and YY halves commute; each half is
// a basis change around a ZZ interaction carried by one RZ(theta). Restricted
// to span{|01>,|10>} the unitary is [[cos t, -i sin t], [-i sin t, cos t]].
inline qsim::Circuit dimer_propagator_circuit(double theta) {
  using qsim::GateKind;
  using qsim::make_gate;
  qsim::Circuit c;
  c.n_qubits = 2;
  auto zz_block = [&c, theta]() {
    c.gates.push_back(make_gate(GateKind::CNOT, {0, 1}));
    c.gates.push_back(make_gate(GateKind::RZ, {1}, theta));
    c.gates.push_back(make_gate(GateKind::CNOT, {0, 1}));
  };
  // exp(-i theta/2 XX) = (H H) exp(-i theta/2 ZZ) (H H)
  for (int q : {0, 1}) c.gates.push_back(make_gate(GateKind::H, {q}));
  zz_block();
  for (int q : {0, 1}) c.gates.push_back(make_gate(GateKind::H, {q}));
  // exp(-i theta/2 YY) = (S H) exp(-i theta/2 ZZ) (H Sdg)
  for (int q : {0, 1}) c.gates.push_back(make_gate(GateKind::Sdag, {q}));
  for (int q : {0, 1}) c.gates.push_back(make_gate(GateKind::H, {q}));
  zz_block();
  for (int q : {0, 1}) c.gates.push_back(make_gate(GateKind::H, {q}));
  for (int q : {0, 1}) c.gates.push_back(make_gate(GateKind::S, {q}));
  return c;
}

}  // namespace eetsim::exciton

#endif
