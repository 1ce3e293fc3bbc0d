#pragma once

namespace evb::constants {

// CODATA 2018 exact / recommended values, SI.
inline constexpr double planck = 6.62607015e-34;               // J s
inline constexpr double hbar = 1.054571817e-34;                // J s
inline constexpr double elementary_charge = 1.602176634e-19;   // C
inline constexpr double electron_mass = 9.1093837015e-31;      // kg
inline constexpr double speed_of_light = 299792458.0;          // m/s
inline constexpr double bohr_magneton = 9.2740100783e-24;      // J/T

// m_e c^2 / e, derived from the values above.
inline constexpr double electron_rest_energy_ev =
    electron_mass * speed_of_light * speed_of_light / elementary_charge;

}  // namespace evb::constants
