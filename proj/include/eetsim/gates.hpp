#ifndef EETSIM_GATES_HPP
#define EETSIM_GATES_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "eetsim/pauli.hpp"

namespace eetsim::qsim {

enum class GateKind { X, Z, S, Sdag, H, RZ, CNOT, SWAP, Unitary };

inline std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdag: return "sdg";
    case GateKind::H: return "h";
    case GateKind::RZ: return "rz";
    case GateKind::CNOT: return "cnot";
    case GateKind::SWAP: return "swap";
    default: return "unitary";
  }
}

// One gate. `qubits` lists targets (for CNOT: {control, target}); qubit 0 is
// the least significant bit of a basis index. Gates from decoherence-inducing
// sequences are flagged `noisy`; propagator gates are not.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;
  double angle = 0.0;
  bool noisy = false;
  Matrix custom;

  int arity() const {
    switch (kind) {
      case GateKind::CNOT:
      case GateKind::SWAP: return 2;
      case GateKind::Unitary: {
        Eigen::Index d = custom.rows();
        int n = 0;
        while (d > 1) { d /= 2; ++n; }
        return n;
      }
      default: return 1;
    }
  }

  // Z rotations on IBM-style hardware are frame shifts, not pulses.
  bool is_virtual() const {
    return kind == GateKind::Z || kind == GateKind::S ||
           kind == GateKind::Sdag || kind == GateKind::RZ;
  }

  // Unitary on the gate's own qubits; local index bit j corresponds to
  // qubits[j].
  Matrix matrix() const {
    using namespace std::complex_literals;
    switch (kind) {
      case GateKind::X: return pauli::x();
      case GateKind::Z: return pauli::z();
      case GateKind::S: {
        Matrix m(2, 2);
        m << 1, 0, 0, 1i;
        return m;
      }
      case GateKind::Sdag: {
        Matrix m(2, 2);
        m << 1, 0, 0, -1i;
        return m;
      }
      case GateKind::H: {
        Matrix m(2, 2);
        const double s = 1.0 / std::sqrt(2.0);
        m << s, s, s, -s;
        return m;
      }
      case GateKind::RZ: {
        Matrix m = Matrix::Zero(2, 2);
        m(0, 0) = std::exp(-0.5i * angle);
        m(1, 1) = std::exp(0.5i * angle);
        return m;
      }
      case GateKind::CNOT: {
        // local bit 0 = control, bit 1 = target
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = 1;
        m(1, 3) = 1;
        m(2, 2) = 1;
        m(3, 1) = 1;
        return m;
      }
      case GateKind::SWAP: {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = 1;
        m(1, 2) = 1;
        m(2, 1) = 1;
        m(3, 3) = 1;
        return m;
      }
      default: return custom;
    }
  }
};

inline Gate make_gate(GateKind kind, std::vector<int> qubits, double angle = 0.0,
                      bool noisy = false) {
  Gate g;
  g.kind = kind;
  g.qubits = std::move(qubits);
  g.angle = angle;
  g.noisy = noisy;
  return g;
}

struct Circuit {
  int n_qubits = 2;
  std::vector<Gate> gates;

  void append(const Circuit& other) {
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  }
};

// Embeds a gate unitary into the full 2^n-dimensional space.
inline Matrix embed_unitary(const Gate& g, int n_qubits) {
  const int arity = g.arity();
  if (static_cast<int>(g.qubits.size()) != arity)
    throw std::invalid_argument("gate arity does not match its qubit list");
  for (int q : g.qubits)
    if (q < 0 || q >= n_qubits)
      throw std::invalid_argument("gate targets a qubit outside the register");

  const Matrix local = g.matrix();
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  const int ldim = 1 << arity;
  Matrix full = Matrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    int lcol = 0;
    for (int j = 0; j < arity; ++j)
      lcol |= static_cast<int>((col >> g.qubits[j]) & 1) << j;
    for (int lrow = 0; lrow < ldim; ++lrow) {
      const Complex amp = local(lrow, lcol);
      if (amp == Complex(0, 0)) continue;
      Eigen::Index row = col;
      for (int j = 0; j < arity; ++j) {
        const Eigen::Index bit = Eigen::Index(1) << g.qubits[j];
        row = (row & ~bit) | (((lrow >> j) & 1) ? bit : 0);
      }
      full(row, col) = amp;
    }
  }
  return full;
}

// Product of the circuit's gate unitaries (last gate leftmost).
inline Matrix circuit_unitary(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index(1) << c.n_qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate& g : c.gates) u = embed_unitary(g, c.n_qubits) * u;
  return u;
}

}  // namespace eetsim::qsim

#endif
