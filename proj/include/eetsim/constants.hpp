#ifndef EETSIM_CONSTANTS_HPP
#define EETSIM_CONSTANTS_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eetsim {

// Unit conventions used throughout:
//   energies        : wavenumbers [cm^-1]
//   times           : femtoseconds
//   angular rates   : rad/fs, via omega = 2*pi*c * (value in cm^-1)
//   bath cutoff     : ps^-1, interpreted as the correlation-function decay
//                     rate C(t) ~ exp(-gamma*t); 1 ps^-1 = 1e-3 fs^-1
namespace constants {

inline constexpr double speed_of_light_cm_per_fs = 2.99792458e-5;
inline constexpr double boltzmann_cm1_per_K = 0.6950348004;

// rad/fs per cm^-1
inline constexpr double two_pi_c =
    2.0 * std::numbers::pi * speed_of_light_cm_per_fs;

}  // namespace constants

// Converts a wavenumber [cm^-1] to an angular frequency [rad/fs].
inline double angular_from_wavenumber(double wavenumber_cm1) {
  return constants::two_pi_c * wavenumber_cm1;
}

// Converts a rate given in ps^-1 to fs^-1.
inline double rate_from_ps(double rate_psinv) { return rate_psinv * 1e-3; }

// Thermal energy k_B*T as an angular frequency [rad/fs].
inline double thermal_angular(double temperature_K) {
  return angular_from_wavenumber(constants::boltzmann_cm1_per_K * temperature_K);
}

namespace exciton {

// Dimensionless angle advanced per time step: theta = 2*pi*c * J0 * dt.
// For J0 = 100 cm^-1 and dt = 2 fs this gives 0.0376730.
struct EnergyScale {
  double J0_cm1 = 100.0;
  double dt_fs = 2.0;

  double delta_theta() const {
    if (J0_cm1 <= 0.0 || dt_fs <= 0.0)
      throw std::invalid_argument("EnergyScale: J0 and dt must be positive");
    return constants::two_pi_c * J0_cm1 * dt_fs;
  }

  // Simulation time [fs] corresponding to a dimensionless angle.
  double time_fs(double theta) const {
    return theta / (constants::two_pi_c * J0_cm1);
  }
};

}  // namespace exciton
}  // namespace eetsim

#endif
