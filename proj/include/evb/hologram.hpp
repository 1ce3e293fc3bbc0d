#pragma once

#include <filesystem>

#include "evb/beam.hpp"
#include "evb/types.hpp"

namespace evb {

/// Fork-hologram design parameters plus the stops applied around it.
/// dead_zone_radius = 0 means the carrier runs through the singular center.
struct HologramSpec {
  int winding = 0;                  // dislocation count m
  double period = 0.0;              // carrier period, meters
  double modulation_depth = 0.0;    // t0, meters
  double base_thickness = 0.0;      // constant offset, meters
  double mean_inner_potential = 0;  // V_mip, volts (no default on purpose)
  double aperture_radius = 0.0;     // meters
  double dead_zone_radius = 0.0;    // meters; must be < aperture_radius
};

void validate(const HologramSpec& spec);

struct ThicknessMap {
  GridSpec grid;
  Eigen::ArrayXXd t;  // meters, shape (nx, ny)
};

/// t(x, y) = t_base + t0 (1 + cos(m*phi + 2*pi*x/period)) / 2 evaluated at
/// every pixel; the aperture and dead-zone stops are applied later by
/// transmission(). Requires pitch <= period/4 ("carrier undersampled").
ThicknessMap synthesize_thickness(const HologramSpec& spec, const GridSpec& grid,
                                  int threads = 1);

/// Reads a 16-bit PGM and maps gray levels to thickness: t = gray * scale.
ThicknessMap load_thickness_map(const std::filesystem::path& path, double pitch,
                                double scale);

/// Writes t / scale rounded to gray levels, clamped to [0, 65535].
void save_thickness_pgm(const std::filesystem::path& path, const ThicknessMap& map,
                        double scale);

/// Pure-phase transmission exp(i * sigma * V_mip * t) inside the annulus
/// dead_zone_radius < r <= aperture_radius (radii about the physical origin);
/// zero outside the aperture and inside the dead zone. |values| is exactly
/// 0 or 1 everywhere.
ComplexField transmission(const ThicknessMap& t, const BeamParams& beam,
                          const HologramSpec& spec, int threads = 1);

/// Unit-power Gaussian exp(-r^2/w0^2) about the physical origin.
ComplexField gaussian_illumination(const GridSpec& grid, double waist);

/// Pointwise product illum * trans; grids must match.
ComplexField exit_wave(const ComplexField& illum, const ComplexField& trans);

}  // namespace evb
