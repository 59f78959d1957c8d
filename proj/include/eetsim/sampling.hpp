#ifndef EETSIM_SAMPLING_HPP
#define EETSIM_SAMPLING_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "eetsim/density_matrix.hpp"

namespace eetsim::qsim {

// Counter-based 64-bit generator (SplitMix64). Streams for independent time
// points are derived as seed ^ step so points can be sampled in parallel and
// still reproduce bit-identically.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform double in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t step) {
  return seed ^ step;
}

// Shot counts over computational basis states; index = little-endian bit
// value, label printed most-significant qubit first ("01" = qubit 0 set).
struct Counts {
  int n_qubits = 2;
  std::uint64_t shots = 0;
  std::vector<std::uint64_t> per_state;

  std::uint64_t total() const {
    return std::accumulate(per_state.begin(), per_state.end(),
                           std::uint64_t{0});
  }

  static std::string label(int n_qubits, std::size_t index) {
    std::string s(n_qubits, '0');
    for (int q = 0; q < n_qubits; ++q)
      if ((index >> q) & 1) s[n_qubits - 1 - q] = '1';
    return s;
  }
};

// Measurement probabilities from the diagonal of rho. Small negative values
// (float noise, >= -1e-10) are clipped and the vector renormalized; anything
// more negative is a logic error upstream.
inline std::vector<double> measurement_probabilities(const DensityMatrix& rho) {
  std::vector<double> p(static_cast<std::size_t>(rho.dim()));
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    const double v = rho.data(i, i).real();
    if (v < -1e-10)
      throw std::runtime_error("state has a negative population beyond -1e-10");
    p[static_cast<std::size_t>(i)] = v < 0.0 ? 0.0 : v;
  }
  double sum = std::accumulate(p.begin(), p.end(), 0.0);
  if (sum <= 0.0) throw std::runtime_error("state has zero total population");
  for (double& v : p) v /= sum;
  return p;
}

// Independent per-qubit readout bit flips with probability p.
inline std::vector<double> apply_readout_flip(std::vector<double> probs,
                                              int n_qubits, double p) {
  if (p == 0.0) return probs;
  for (int q = 0; q < n_qubits; ++q) {
    std::vector<double> next(probs.size(), 0.0);
    for (std::size_t i = 0; i < probs.size(); ++i) {
      const std::size_t flipped = i ^ (std::size_t(1) << q);
      next[i] += (1.0 - p) * probs[i];
      next[flipped] += p * probs[i];
    }
    probs = std::move(next);
  }
  return probs;
}

// Multinomial draw from the diagonal of rho; deterministic for a fixed seed
// (inverse-CDF sampling on SplitMix64 uniforms, no library distributions).
inline Counts sample_counts(const DensityMatrix& rho, std::uint64_t shots,
                            std::uint64_t seed, double readout_flip_p = 0.0) {
  if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");
  std::vector<double> p = apply_readout_flip(measurement_probabilities(rho),
                                             rho.n_qubits, readout_flip_p);
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;

  Counts counts;
  counts.n_qubits = rho.n_qubits;
  counts.shots = shots;
  counts.per_state.assign(p.size(), 0);
  SplitMix64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    std::size_t idx = 0;
    while (idx + 1 < cdf.size() && u >= cdf[idx]) ++idx;
    ++counts.per_state[idx];
  }
  return counts;
}

}  // namespace eetsim::qsim

#endif
