#pragma once

#include "evb/types.hpp"

namespace evb {

// All propagators share one sign convention, fixed by the angular-spectrum
// transfer function exp(+i*pi*lambda*z*(fx^2+fy^2)): the far-field kernel is
// exp(+2*pi*i*theta.x/lambda) and the single-transform Fresnel chirps are
// exp(-i*pi*r^2/(lambda*z)). One observable consequence: a grating order n
// (transverse phase exp(2*pi*i*n*x/period)) lands at angle -n*lambda/period.

/// Centered far-field transform. Output pitch is angular,
/// lambda/(n*pitch) radians per pixel; total power is preserved.
/// Requires a square, even grid.
ComplexField fraunhofer(const ComplexField& f, double wavelength, int threads = 1);

/// Distance n*pitch^2/lambda at which the single-transform chirp is critically
/// sampled; shorter propagation must use the angular-spectrum path.
double fresnel_critical_distance(const GridSpec& grid, double wavelength);

/// Single-FFT Fresnel propagation to |z| >= critical distance. Output pitch
/// lambda*|z|/(n*pitch). Throws "use angular-spectrum regime" below the bound.
ComplexField fresnel_single_transform(const ComplexField& f, double z,
                                      double wavelength, int threads = 1);

/// Same-grid Fresnel propagation via the frequency-space transfer function;
/// alias-safe for |z| <= critical distance.
ComplexField fresnel_angular_spectrum(const ComplexField& f, double z,
                                      double wavelength, int threads = 1);

/// Fresnel propagation with automatic path selection at the chirp-aliasing
/// bound: angular spectrum below fresnel_critical_distance, single transform
/// at or above it. z must be nonzero.
ComplexField fresnel(const ComplexField& f, double z, double wavelength,
                     int threads = 1);

/// Small-angle grating equation n*lambda/period.
double order_angle(int n, double period, double wavelength);

/// Zeroes everything outside a disk of `radius` (radians) centered on the
/// n-th diffraction order of a carrier along x. Requires a Fraunhofer-plane
/// input; throws if the disk exits the grid.
ComplexField select_order(const ComplexField& far, int n, double period,
                          double wavelength, double radius);

}  // namespace evb
