#pragma once

#include "evb/constants.hpp"

namespace evb {

/// Electron beam parameters. Energies in eV, lengths in meters.
struct BeamParams {
  double kinetic_energy_ev = 0.0;
  double rest_energy_ev = constants::electron_rest_energy_ev;
  double waist = 0.0;  // 1/e amplitude radius of the illumination Gaussian
};

/// Relativistic de Broglie wavelength h / sqrt(2 m E (1 + E/(2 E0))), meters.
double electron_wavelength(const BeamParams& beam);

/// Phase shift per volt of inner potential and meter of thickness,
/// (2 pi e / lambda) * (E + E0) / (E (E + 2 E0)) with energies in joules.
/// Multiplying by V_mip [V] and thickness [m] yields radians.
double interaction_constant(const BeamParams& beam);

}  // namespace evb
