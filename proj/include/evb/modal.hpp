#pragma once

#include <Eigen/Dense>

#include "evb/constants.hpp"

namespace evb {

/// Radial part of the normalized Laguerre-Gauss mode LG_{p,m},
///   sqrt(2^(|m|+1) p! / (pi (p+|m|)!)) rho^|m| exp(-rho^2) L_p^|m|(2 rho^2),
/// in the dimensionless radius rho = r/w0. The full 2-D mode (with the
/// exp(i m phi) factor) is orthonormal under the measure rho drho dphi.
Eigen::ArrayXd lg_radial(int p, int m, const Eigen::ArrayXd& rho);

/// Expansion coefficient of the unit-power Gaussian vortex exp(-rho^2)
/// exp(i m phi) over LG_{p,m}: (|m|/2) Gamma(p+|m|/2) / sqrt(p! (p+|m|)!),
/// via log-gamma. Throws for m = 0, where the closed form degenerates.
double cp_coefficient(int p, int m);

struct RadialSpectrum {
  int m = 0;
  int p_max = 0;
  Eigen::ArrayXd weights;  // |c_p|^2 for p = 0..p_max
  double tail_bound = 0.0;  // estimate of sum_{p > p_max} |c_p|^2
};

/// Tail estimate sum_{p > p_max} |c_p|^2: the integral
/// of the smooth term function (|c_p|^2 decays like (m/2)^2/p^2) with
/// Euler-Maclaurin endpoint corrections; accurate to well below 1e-6 absolute
/// once p_max is past the weight peak near (m^2 - 4m - 4)/8.
double radial_spectrum_tail(int m, int p_max);

/// Weights |c_p|^2 for p = 0..p_max plus the tail estimate above.
RadialSpectrum radial_spectrum(int m, int p_max);

/// Quadrature evaluation of the same overlap,
///   2 pi * int_0^inf sqrt(2/pi) exp(-rho^2) lg_radial(p, m, rho) rho drho,
/// independent of cp_coefficient's code path. Throws on non-convergence.
double overlap_oracle(int m, int p);

/// Radial amplitude of a Gaussian-vortex beam propagated a distance z,
///   exp(-i pi r^2/(z lambda))/(z lambda)
///     * int_{r_min}^{r_max} J_m(2 pi r r'/(z lambda))
///         exp(-(1 + i pi w0^2/(z lambda)) (r'/w0)^2) r' dr',
/// unnormalized. Composite Gauss panels sized to the Bessel and chirp
/// oscillations, refined until converged.
Eigen::ArrayXcd hygg_radial(const Eigen::ArrayXd& r, double z, int m, double w0,
                            double wavelength, double r_min, double r_max);

struct LandauParams {
  double field_tesla = 0.0;
  double larmor_frequency() const {  // e B / (2 m_e)
    return constants::elementary_charge * field_tesla / (2.0 * constants::electron_mass);
  }
};

/// Transverse Landau-level energy hbar * Omega * (2p + m + |m| + 1), joules.
double landau_energy(int p, int m, const LandauParams& lp);

/// Orbital magnetic moment in Bohr magnetons: exactly m, signed.
double magnetic_moment(int m);

}  // namespace evb
