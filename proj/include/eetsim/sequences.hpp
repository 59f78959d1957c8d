#ifndef EETSIM_SEQUENCES_HPP
#define EETSIM_SEQUENCES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "eetsim/gates.hpp"

namespace eetsim::noisegen {

// The decoherence-inducing identity words. (X)^2, (XZ)^2 and (XZXZZ)^2 act
// on single qubits; (SWAP)^2 is the non-local word.
enum class SequenceKind { X2, XZ2, XZXZZ2, SWAP2 };

inline std::string to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::X2: return "x2";
    case SequenceKind::XZ2: return "xz2";
    case SequenceKind::XZXZZ2: return "xzxzz2";
    default: return "swap2";
  }
}

inline SequenceKind sequence_from_string(const std::string& s) {
  if (s == "x2") return SequenceKind::X2;
  if (s == "xz2") return SequenceKind::XZ2;
  if (s == "xzxzz2") return SequenceKind::XZXZZ2;
  if (s == "swap2") return SequenceKind::SWAP2;
  throw std::invalid_argument("unknown gate sequence: " + s);
}

struct GateSequence {
  SequenceKind kind = SequenceKind::SWAP2;
  std::vector<int> qubits = {0, 1};
};

// Expands one sequence into gates, all flagged noisy. SWAP decomposes into
// 3 CNOTs (hardware compilation), so (SWAP)^2 is 6 CNOTs. Every noiseless
// product contracts to the identity up to a global phase.
inline std::vector<qsim::Gate> expand_sequence(const GateSequence& seq) {
  using qsim::GateKind;
  using qsim::make_gate;
  std::vector<qsim::Gate> gates;
  auto word_on = [&gates](int q, const std::vector<GateKind>& word) {
    for (GateKind k : word) gates.push_back(make_gate(k, {q}, 0.0, true));
  };
  switch (seq.kind) {
    case SequenceKind::X2:
      word_on(seq.qubits[0], {GateKind::X, GateKind::X});
      break;
    case SequenceKind::XZ2:
      word_on(seq.qubits[0],
              {GateKind::X, GateKind::Z, GateKind::X, GateKind::Z});
      break;
    case SequenceKind::XZXZZ2: {
      const std::vector<GateKind> half = {GateKind::X, GateKind::Z, GateKind::X,
                                          GateKind::Z, GateKind::Z};
      word_on(seq.qubits[0], half);
      word_on(seq.qubits[0], half);
      break;
    }
    case SequenceKind::SWAP2: {
      if (seq.qubits.size() != 2)
        throw std::invalid_argument("swap2 needs two qubits");
      const int a = seq.qubits[0], b = seq.qubits[1];
      for (int rep = 0; rep < 2; ++rep) {
        gates.push_back(make_gate(GateKind::CNOT, {a, b}, 0.0, true));
        gates.push_back(make_gate(GateKind::CNOT, {b, a}, 0.0, true));
        gates.push_back(make_gate(GateKind::CNOT, {a, b}, 0.0, true));
      }
      break;
    }
  }
  return gates;
}

inline bool is_single_qubit(SequenceKind k) { return k != SequenceKind::SWAP2; }

}  // namespace eetsim::noisegen

#endif
