#ifndef EETSIM_SCHEDULE_HPP
#define EETSIM_SCHEDULE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "eetsim/exciton.hpp"
#include "eetsim/sequences.hpp"

namespace eetsim::noisegen {

// Insertion schedule for decoherence-inducing sequences. The damping
// coefficient d counts sequences per decoherence period Delta_T_D (in steps):
// cumulative insertions at step s equal floor(d*s/Delta_T_D).
struct DissipationSchedule {
  double d = 0.0;
  int delta_T_D = 25;
  int n_steps = 150;
  std::vector<int> insertions_per_step;  // index s-1 holds insertions at step s

  int cumulative(int step) const {
    int total = 0;
    for (int s = 0; s < step && s < n_steps; ++s)
      total += insertions_per_step[s];
    return total;
  }

  int total_insertions() const { return cumulative(n_steps); }
};

inline DissipationSchedule build_schedule(double d, int n_steps,
                                          int delta_T_D = 25) {
  if (d < 0.0) throw std::invalid_argument("damping coefficient must be >= 0");
  if (n_steps < 1 || delta_T_D < 1)
    throw std::invalid_argument("schedule needs n_steps >= 1 and period >= 1");
  DissipationSchedule sched;
  sched.d = d;
  sched.delta_T_D = delta_T_D;
  sched.n_steps = n_steps;
  sched.insertions_per_step.resize(n_steps);
  auto cum = [d, delta_T_D](int s) {
    // nudge against float droop at exact multiples (e.g. d=1, s=25)
    return static_cast<int>(std::floor(d * s / delta_T_D + 1e-9));
  };
  for (int s = 1; s <= n_steps; ++s)
    sched.insertions_per_step[s - 1] = cum(s) - cum(s - 1);
  return sched;
}

// Circuit for one simulation time point. For each step s <= `step`, the
// sequences scheduled at s are applied (single-qubit kinds on both qubits),
// followed by a propagator segment advancing theta_per_step; the segments
// contract noiselessly to a single propagator(step * theta_per_step).
inline qsim::Circuit build_dissipative_circuit(int step,
                                               const DissipationSchedule& sched,
                                               const GateSequence& seq,
                                               double theta_per_step) {
  if (step > sched.n_steps)
    throw std::invalid_argument("step beyond schedule length");
  qsim::Circuit circuit;
  circuit.n_qubits = 2;
  for (int s = 1; s <= step; ++s) {
    for (int i = 0; i < sched.insertions_per_step[s - 1]; ++i) {
      if (is_single_qubit(seq.kind)) {
        for (int q : {0, 1}) {
          GateSequence local = seq;
          local.qubits = {q};
          for (const auto& g : expand_sequence(local)) circuit.gates.push_back(g);
        }
      } else {
        for (const auto& g : expand_sequence(seq)) circuit.gates.push_back(g);
      }
    }
    circuit.append(exciton::dimer_propagator_circuit(theta_per_step));
  }
  return circuit;
}

}  // namespace eetsim::noisegen

#endif
