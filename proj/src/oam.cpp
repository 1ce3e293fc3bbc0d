#include "evb/oam.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "evb/field.hpp"

namespace evb {

double OAMSpectrum::weight_at(int m) const {
  const int i = m - m_min;
  if (i < 0 || i >= weights.size()) return 0.0;
  return weights[i];
}

Eigen::Vector2d centroid(const ComplexField& f) {
  validate(f.grid);
  double wsum = 0.0, xsum = 0.0, ysum = 0.0;
  for (int iy = 0; iy < f.grid.ny; ++iy) {
    const double y = f.grid.y(iy);
    for (int ix = 0; ix < f.grid.nx; ++ix) {
      const double w = std::norm(f.values(ix, iy));
      wsum += w;
      xsum += w * f.grid.x(ix);
      ysum += w * y;
    }
  }
  if (!(wsum > 0.0)) throw std::invalid_argument("degenerate field");
  return {xsum / wsum, ysum / wsum};
}

OAMSpectrum oam_spectrum(const PolarField& polar) {
  const int n_r = polar.n_r, n_phi = polar.n_phi;
  Eigen::ArrayXd power = Eigen::ArrayXd::Zero(n_phi);  // indexed by FFT bin
  Eigen::ArrayXd ring_power = Eigen::ArrayXd::Zero(n_r);

  Eigen::FFT<double> fft;
  std::vector<Complex> ring(static_cast<size_t>(n_phi)), coef(static_cast<size_t>(n_phi));
  const double dr = polar.dr();
  for (int i = 0; i < n_r; ++i) {
    for (int k = 0; k < n_phi; ++k) ring[static_cast<size_t>(k)] = polar.values(i, k);
    fft.fwd(coef.data(), ring.data(), n_phi);
    const double measure = polar.r(i) * dr;
    double rp = 0.0;
    for (int b = 0; b < n_phi; ++b) {
      const double w = std::norm(coef[static_cast<size_t>(b)]) * measure;
      power[b] += w;
      rp += w;
    }
    ring_power[i] = rp;
  }

  const double total = power.sum();
  if (!(total > 0.0)) throw std::invalid_argument("degenerate field");

  OAMSpectrum spec;
  spec.m_min = -n_phi / 2;
  spec.weights.resize(n_phi);
  // FFT bin b holds azimuthal index b for b < n_phi/2 and b - n_phi above.
  for (int m = spec.m_min; m < n_phi / 2; ++m) {
    const int b = m >= 0 ? m : m + n_phi;
    spec.weights[m - spec.m_min] = power[b] / total;
  }

  double mean = 0.0;
  for (int i = 0; i < n_phi; ++i) mean += (spec.m_min + i) * spec.weights[i];
  double var = 0.0;
  for (int i = 0; i < n_phi; ++i) {
    const double d = (spec.m_min + i) - mean;
    var += spec.weights[i] * d * d;
  }
  // Kish effective ring count.
  const double rp_sum = ring_power.sum();
  const double rp_sq = (ring_power * ring_power).sum();
  const double n_eff = rp_sq > 0.0 ? rp_sum * rp_sum / rp_sq : 1.0;
  spec.mean = mean;
  spec.sem = std::sqrt(var / n_eff);
  return spec;
}

OAMSpectrum oam_spectrum(const ComplexField& f, const Eigen::Vector2d& center,
                         int n_r, int n_phi, double r_max) {
  return oam_spectrum(resample_polar(f, center, n_r, n_phi, r_max));
}

SingularityMap singularity_map(const ComplexField& f, double threshold) {
  validate(f.grid);
  if (threshold < 0.0)
    throw std::invalid_argument("singularity_map: threshold must be >= 0");

  SingularityMap map;
  map.grid = f.grid;

  double peak = 0.0;
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    peak = std::max(peak, std::norm(f.values.data()[i]));
  const double floor = threshold * peak;

  auto wrap = [](double d) {
    // wrap to (-pi, pi]
    while (d > M_PI) d -= 2.0 * M_PI;
    while (d <= -M_PI) d += 2.0 * M_PI;
    return d;
  };

  for (int iy = 0; iy + 1 < f.grid.ny; ++iy) {
    for (int ix = 0; ix + 1 < f.grid.nx; ++ix) {
      const Complex v00 = f.values(ix, iy);
      const Complex v10 = f.values(ix + 1, iy);
      const Complex v11 = f.values(ix + 1, iy + 1);
      const Complex v01 = f.values(ix, iy + 1);
      if (threshold > 0.0) {
        const double imin = std::min(std::min(std::norm(v00), std::norm(v10)),
                                     std::min(std::norm(v11), std::norm(v01)));
        if (imin < floor) continue;
      }
      const double p00 = std::arg(v00), p10 = std::arg(v10);
      const double p11 = std::arg(v11), p01 = std::arg(v01);
      const double circulation = wrap(p10 - p00) + wrap(p11 - p10) +
                                 wrap(p01 - p11) + wrap(p00 - p01);
      const int q = static_cast<int>(std::lround(circulation / (2.0 * M_PI)));
      if (q != 0) map.charges.push_back({ix, iy, q});
    }
  }
  return map;
}

int enclosed_charge(const SingularityMap& map, const Eigen::Vector2d& center,
                    double radius) {
  const double r2 = radius * radius;
  int total = 0;
  for (const auto& c : map.charges) {
    const double px = map.grid.x(c.ix) + 0.5 * map.grid.pitch;
    const double py = map.grid.y(c.iy) + 0.5 * map.grid.pitch;
    const double dx = px - center.x(), dy = py - center.y();
    if (dx * dx + dy * dy <= r2) total += c.q;
  }
  return total;
}

RadialProfile radial_profile(const ComplexField& f, const Eigen::Vector2d& center,
                             int n_bins) {
  validate(f.grid);
  if (n_bins < 1) throw std::invalid_argument("radial_profile: n_bins must be >= 1");
  const GridSpec& g = f.grid;
  const double margin = std::min(
      std::min(center.x() - g.x(0), g.x(g.nx - 1) - center.x()),
      std::min(center.y() - g.y(0), g.y(g.ny - 1) - center.y()));
  if (!(margin > 0.0))
    throw std::invalid_argument("radial_profile: center outside grid");
  const double dr = margin / n_bins;

  Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(n_bins);
  Eigen::ArrayXd count = Eigen::ArrayXd::Zero(n_bins);
  for (int iy = 0; iy < g.ny; ++iy) {
    const double dy = g.y(iy) - center.y();
    for (int ix = 0; ix < g.nx; ++ix) {
      const double dx = g.x(ix) - center.x();
      const double r = std::sqrt(dx * dx + dy * dy);
      const int b = static_cast<int>(r / dr);
      if (b >= n_bins) continue;
      sum[b] += std::norm(f.values(ix, iy));
      count[b] += 1.0;
    }
  }

  RadialProfile prof;
  prof.r.resize(n_bins);
  prof.intensity.resize(n_bins);
  for (int b = 0; b < n_bins; ++b) {
    prof.r[b] = (b + 0.5) * dr;
    prof.intensity[b] = count[b] > 0.0 ? sum[b] / count[b] : 0.0;
  }
  return prof;
}

}  // namespace evb
