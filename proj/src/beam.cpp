#include "evb/beam.hpp"

#include <cmath>
#include <stdexcept>

namespace evb {

double electron_wavelength(const BeamParams& beam) {
  if (!(beam.kinetic_energy_ev > 0.0))
    throw std::invalid_argument("beam: kinetic energy must be positive");
  if (!(beam.rest_energy_ev > 0.0))
    throw std::invalid_argument("beam: rest energy must be positive");
  namespace k = constants;
  const double e_joule = beam.kinetic_energy_ev * k::elementary_charge;
  const double ratio = beam.kinetic_energy_ev / (2.0 * beam.rest_energy_ev);
  return k::planck / std::sqrt(2.0 * k::electron_mass * e_joule * (1.0 + ratio));
}

double interaction_constant(const BeamParams& beam) {
  namespace k = constants;
  const double lambda = electron_wavelength(beam);
  const double e_j = beam.kinetic_energy_ev * k::elementary_charge;
  const double e0_j = beam.rest_energy_ev * k::elementary_charge;
  return 2.0 * M_PI * k::elementary_charge / lambda * (e_j + e0_j) /
         (e_j * (e_j + 2.0 * e0_j));
}

}  // namespace evb
