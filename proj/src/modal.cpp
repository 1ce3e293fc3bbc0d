#include "evb/modal.hpp"

#include <cmath>
#include <stdexcept>

#include "evb/special.hpp"

namespace evb {

Eigen::ArrayXd lg_radial(int p, int m, const Eigen::ArrayXd& rho) {
  if (p < 0) throw std::invalid_argument("lg_radial: p must be >= 0");
  const int alpha = std::abs(m);
  Eigen::ArrayXd out(rho.size());
  const double front = std::sqrt(2.0 / M_PI);
  for (Eigen::Index i = 0; i < rho.size(); ++i) {
    const double r = rho[i];
    if (r < 0.0) throw std::invalid_argument("lg_radial: rho must be >= 0");
    // The whole normalized radial mode collapses onto the orthonormal
    // Laguerre function of argument 2 rho^2.
    out[i] = front * laguerre_orthonormal(p, alpha, 2.0 * r * r);
  }
  return out;
}

namespace {

double log_cp2(double a, double p) {
  return 2.0 * std::log(a) + 2.0 * std::lgamma(p + a) - std::lgamma(p + 1.0) -
         std::lgamma(p + 2.0 * a + 1.0);
}

}  // namespace

double cp_coefficient(int p, int m) {
  if (p < 0) throw std::invalid_argument("cp_coefficient: p must be >= 0");
  if (m == 0) throw std::invalid_argument("formula undefined for m=0");
  const double a = std::abs(m) / 2.0;
  return std::exp(0.5 * log_cp2(a, p));
}

double radial_spectrum_tail(int m, int p_max) {
  if (m == 0) throw std::invalid_argument("formula undefined for m=0");
  if (p_max < 1) throw std::invalid_argument("radial_spectrum: p_max must be >= 1");
  const double a = std::abs(m) / 2.0;
  const auto g = [a](double x) { return std::exp(log_cp2(a, x)); };

  // sum_{p >= P} g(p) = int_P^inf g + g(P)/2 - g'(P)/12 + O(g'''), with the
  // integral mapped to [0, 1/P] by u = 1/x where the integrand is smooth.
  const double P = p_max + 1.0;
  static const GaussRule rule = gauss_legendre(64);
  double integral = 0.0;
  const double half = 0.5 / P;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double u = half * (rule.nodes[i] + 1.0);
    integral += rule.weights[i] * g(1.0 / u) / (u * u);
  }
  integral *= half;
  const double h = 0.25;
  const double gp = (g(P + h) - g(P - h)) / (2.0 * h);
  return integral + 0.5 * g(P) - gp / 12.0;
}

RadialSpectrum radial_spectrum(int m, int p_max) {
  if (m == 0) throw std::invalid_argument("formula undefined for m=0");
  if (p_max < 1) throw std::invalid_argument("radial_spectrum: p_max must be >= 1");
  RadialSpectrum spec;
  spec.m = m;
  spec.p_max = p_max;
  spec.weights.resize(p_max + 1);
  const double a = std::abs(m) / 2.0;
  for (int p = 0; p <= p_max; ++p) spec.weights[p] = std::exp(log_cp2(a, p));
  spec.tail_bound = radial_spectrum_tail(m, p_max);
  return spec;
}

double overlap_oracle(int m, int p) {
  if (m == 0) throw std::invalid_argument("formula undefined for m=0");
  if (p < 0) throw std::invalid_argument("overlap_oracle: p must be >= 0");
  const int alpha = std::abs(m);
  // Integrand support ends a little past the Laguerre turning radius; the
  // exp(-2 rho^2) weight kills everything beyond it.
  const double rho_cut = std::sqrt(2.0 * p + alpha + 1.0) + 6.0;
  const auto f = [p, alpha](double rho) {
    return std::exp(-rho * rho) * laguerre_orthonormal(p, alpha, 2.0 * rho * rho) * rho;
  };
  const QuadResult q =
      adaptive_gauss_kronrod(f, 0.0, rho_cut, 1e-13, 1e-12, 4000);
  if (!q.converged)
    throw std::runtime_error("overlap oracle did not converge");
  // 2 pi times the two sqrt(2/pi) prefactors (test function and mode) is 4.
  return 4.0 * q.value;
}

Eigen::ArrayXcd hygg_radial(const Eigen::ArrayXd& r, double z, int m, double w0,
                            double wavelength, double r_min, double r_max) {
  if (z == 0.0) throw std::invalid_argument("hygg: z must be nonzero");
  if (!(w0 > 0.0)) throw std::invalid_argument("hygg: w0 must be positive");
  if (!(wavelength > 0.0)) throw std::invalid_argument("hygg: wavelength must be positive");
  if (!(r_min >= 0.0) || !(r_min < r_max))
    throw std::invalid_argument("hygg: need 0 <= r_min < r_max");

  const double lz = z * wavelength;
  const std::complex<double> decay(1.0 / (w0 * w0), M_PI / lz);
  static const GaussRule rule = gauss_legendre(16);

  const auto integrate = [&](double k_bessel, int panels) {
    std::complex<double> acc(0.0, 0.0);
    const double width = (r_max - r_min) / panels;
    const double half = 0.5 * width;
    for (int p = 0; p < panels; ++p) {
      const double mid = r_min + (p + 0.5) * width;
      for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double rp = mid + half * rule.nodes[i];
        const double phase = -decay.imag() * rp * rp;
        const std::complex<double> gauss =
            std::exp(-decay.real() * rp * rp) *
            std::complex<double>(std::cos(phase), std::sin(phase));
        acc += rule.weights[i] * bessel_j(m, k_bessel * rp) * gauss * rp;
      }
    }
    return acc * half;
  };

  Eigen::ArrayXcd out(r.size());
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    const double ri = r[i];
    const double k = 2.0 * M_PI * ri / lz;
    // Quarter-period panel sizing for both oscillators: the Bessel kernel
    // (local period 2 pi/|k|) and the Gaussian chirp (period pi/(|Im c| r')).
    double width_cap = (r_max - r_min) / 8.0;
    if (std::abs(k) > 0.0)
      width_cap = std::min(width_cap, 0.5 * M_PI / std::abs(k));
    const double chirp_rate = std::abs(decay.imag()) * 2.0 * r_max;
    if (chirp_rate > 0.0)
      width_cap = std::min(width_cap, 0.5 * M_PI / chirp_rate);
    int panels = std::max(8, static_cast<int>(std::ceil((r_max - r_min) / width_cap)));

    // absolute floor from the envelope bound |integral| <= w0^2/2, so radii
    // sitting on profile nulls still converge
    const double floor = 1e-14 * 0.5 * w0 * w0;
    std::complex<double> prev = integrate(k, panels);
    std::complex<double> cur = prev;
    bool ok = false;
    for (int iter = 0; iter < 8; ++iter) {
      panels *= 2;
      cur = integrate(k, panels);
      if (std::abs(cur - prev) <= 1e-10 * std::abs(cur) + floor) {
        ok = true;
        break;
      }
      prev = cur;
    }
    if (!ok) throw std::runtime_error("hygg quadrature did not converge");

    const double out_phase = -M_PI * ri * ri / lz;
    out[i] = cur / lz *
             std::complex<double>(std::cos(out_phase), std::sin(out_phase));
  }
  return out;
}

double landau_energy(int p, int m, const LandauParams& lp) {
  if (p < 0) throw std::invalid_argument("landau_energy: p must be >= 0");
  return constants::hbar * lp.larmor_frequency() * (2.0 * p + m + std::abs(m) + 1.0);
}

double magnetic_moment(int m) { return static_cast<double>(m); }

}  // namespace evb
