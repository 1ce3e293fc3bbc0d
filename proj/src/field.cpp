#include "evb/field.hpp"

#include <cmath>
#include <stdexcept>

namespace evb {

GridSpec make_centered_grid(int nx, int ny, double pitch) {
  GridSpec g;
  g.nx = nx;
  g.ny = ny;
  g.pitch = pitch;
  g.origin = Eigen::Vector2d(-pitch * (nx / 2), -pitch * (ny / 2));
  validate(g);
  return g;
}

void validate(const GridSpec& grid) {
  if (grid.nx < 2 || grid.ny < 2)
    throw std::invalid_argument("grid: nx and ny must be >= 2");
  if (!(grid.pitch > 0.0))
    throw std::invalid_argument("grid: pitch must be positive");
}

ComplexField make_field(const GridSpec& grid, PlaneTag plane) {
  validate(grid);
  ComplexField f;
  f.grid = grid;
  f.values = Eigen::ArrayXXcd::Zero(grid.nx, grid.ny);
  f.plane = plane;
  return f;
}

double PolarField::phi(int iphi) const {
  return 2.0 * M_PI * iphi / n_phi;
}

double total_power(const ComplexField& f) {
  // Fixed summation order (column-major scan) so results do not depend on
  // thread count.
  double acc = 0.0;
  const Complex* p = f.values.data();
  const Eigen::Index n = f.values.size();
  for (Eigen::Index i = 0; i < n; ++i) acc += std::norm(p[i]);
  return acc * f.grid.pitch * f.grid.pitch;
}

ComplexField normalize(ComplexField f) {
  const double p = total_power(f);
  if (!(p > 0.0)) throw std::invalid_argument("degenerate field");
  f.values *= 1.0 / std::sqrt(p);
  return f;
}

static bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

PolarField resample_polar(const ComplexField& f, const Eigen::Vector2d& center,
                          int n_r, int n_phi, double r_max) {
  validate(f.grid);
  if (n_r < 1) throw std::invalid_argument("resample_polar: n_r must be >= 1");
  if (!is_power_of_two(n_phi))
    throw std::invalid_argument("resample_polar: n_phi must be a power of two");
  if (!(r_max > 0.0))
    throw std::invalid_argument("resample_polar: r_max must be positive");

  const GridSpec& g = f.grid;
  const double x_lo = g.x(0), x_hi = g.x(g.nx - 1);
  const double y_lo = g.y(0), y_hi = g.y(g.ny - 1);
  if (center.x() < x_lo || center.x() > x_hi || center.y() < y_lo ||
      center.y() > y_hi)
    throw std::invalid_argument("resample_polar: center outside grid");
  const double margin = std::min(
      std::min(center.x() - x_lo, x_hi - center.x()),
      std::min(center.y() - y_lo, y_hi - center.y()));
  if (r_max > margin)
    throw std::invalid_argument("polar window exceeds grid");

  PolarField out;
  out.n_r = n_r;
  out.n_phi = n_phi;
  out.r_max = r_max;
  out.center = center;
  out.values.resize(n_r, n_phi);

  const double dr = r_max / n_r;
  for (int k = 0; k < n_phi; ++k) {
    const double phi = 2.0 * M_PI * k / n_phi;
    const double cphi = std::cos(phi), sphi = std::sin(phi);
    for (int i = 0; i < n_r; ++i) {
      const double r = (i + 1) * dr;
      const double fx = (center.x() + r * cphi - g.origin.x()) / g.pitch;
      const double fy = (center.y() + r * sphi - g.origin.y()) / g.pitch;
      int ix = static_cast<int>(std::floor(fx));
      int iy = static_cast<int>(std::floor(fy));
      // Clamp so exact upper-edge hits still have a valid cell.
      ix = std::min(std::max(ix, 0), g.nx - 2);
      iy = std::min(std::max(iy, 0), g.ny - 2);
      const double tx = fx - ix, ty = fy - iy;
      const Complex v00 = f.values(ix, iy);
      const Complex v10 = f.values(ix + 1, iy);
      const Complex v01 = f.values(ix, iy + 1);
      const Complex v11 = f.values(ix + 1, iy + 1);
      out.values(i, k) = (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v10 +
                         (1 - tx) * ty * v01 + tx * ty * v11;
    }
  }
  return out;
}

}  // namespace evb
