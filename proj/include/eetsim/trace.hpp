#ifndef EETSIM_TRACE_HPP
#define EETSIM_TRACE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eetsim {

// Site-population time series with run provenance. Counts columns are only
// populated by the sampling circuit engine.
struct PopulationTrace {
  // provenance
  std::string engine;  // "circuit" | "heom" | "oracle"
  double d = 0.0;
  double lambda_cm1 = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::string params;  // free-form description of noise/bath parameters
  bool renormalized = true;  // P1+P2 sum to 1 (dimer one-exciton manifold)

  std::vector<int> steps;
  std::vector<double> times_fs;
  std::vector<double> thetas;
  std::vector<double> p1;
  std::vector<double> p2;
  std::vector<double> leak_frac;
  bool has_counts = false;
  std::vector<std::array<std::uint64_t, 4>> counts;  // N00, N01, N10, N11

  std::size_t size() const { return times_fs.size(); }

  void push_point(int step, double time_fs, double theta, double P1, double P2,
                  double leak) {
    steps.push_back(step);
    times_fs.push_back(time_fs);
    thetas.push_back(theta);
    p1.push_back(P1);
    p2.push_back(P2);
    leak_frac.push_back(leak);
  }

  void validate() const {
    const std::size_t n = size();
    if (steps.size() != n || thetas.size() != n || p1.size() != n ||
        p2.size() != n || leak_frac.size() != n)
      throw std::runtime_error("PopulationTrace: ragged columns");
    if (has_counts && counts.size() != n)
      throw std::runtime_error("PopulationTrace: ragged counts");
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(times_fs[i] < times_fs[i + 1]))
        throw std::runtime_error("PopulationTrace: times not increasing");
    if (renormalized)
      for (std::size_t i = 0; i < n; ++i)
        if (std::abs(p1[i] + p2[i] - 1.0) > 1e-9)
          throw std::runtime_error("PopulationTrace: populations not normalized");
  }
};

}  // namespace eetsim

#endif
