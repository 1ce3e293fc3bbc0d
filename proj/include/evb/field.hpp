#pragma once

#include "evb/types.hpp"

namespace evb {

/// Integrated probability sum(|values|^2) * pitch^2.
double total_power(const ComplexField& f);

/// Rescales so that total_power(result) == 1. Throws std::invalid_argument
/// ("degenerate field") on a zero-power input.
ComplexField normalize(ComplexField f);

/// Resamples onto a uniform (r, phi) lattice by bilinear interpolation of the
/// real and imaginary parts. Throws "polar window exceeds grid" when some
/// polar sample would fall outside the pixel-center rectangle, and rejects
/// n_phi that is not a power of two.
PolarField resample_polar(const ComplexField& f, const Eigen::Vector2d& center,
                          int n_r, int n_phi, double r_max);

}  // namespace evb
