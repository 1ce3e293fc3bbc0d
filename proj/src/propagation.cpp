#include "evb/propagation.hpp"

#include <cmath>
#include <stdexcept>

#include "evb/fft.hpp"
#include "evb/field.hpp"
#include "evb/parallel.hpp"

namespace evb {

namespace {

void require_square_even(const GridSpec& g, const char* who) {
  validate(g);
  if (g.nx != g.ny)
    throw std::invalid_argument(std::string(who) + " requires a square grid");
  if (g.nx % 2 != 0)
    throw std::invalid_argument(std::string(who) + " requires even grid dimensions");
}

void check_wavelength(double wavelength) {
  if (!(wavelength > 0.0))
    throw std::invalid_argument("propagation: wavelength must be positive");
}

// Multiplies by exp(-i*pi*r^2/(lambda*z)) over the grid's own coordinates.
void apply_chirp(ComplexField& f, double lambda_z, int threads) {
  const GridSpec& g = f.grid;
  parallel_for(g.ny, threads, [&](long y0, long y1) {
    for (long iy = y0; iy < y1; ++iy) {
      const double y = g.y(static_cast<int>(iy));
      for (int ix = 0; ix < g.nx; ++ix) {
        const double x = g.x(ix);
        const double phase = -M_PI * (x * x + y * y) / lambda_z;
        f.values(ix, iy) *= Complex(std::cos(phase), std::sin(phase));
      }
    }
  });
}

}  // namespace

ComplexField fraunhofer(const ComplexField& f, double wavelength, int threads) {
  require_square_even(f.grid, "fraunhofer");
  check_wavelength(wavelength);
  const int n = f.grid.nx;
  const double pitch_out = wavelength / (n * f.grid.pitch);

  ComplexField out;
  out.grid = make_centered_grid(n, n, pitch_out);
  out.plane = PlaneTag::Fraunhofer;
  out.values = f.values;
  centered_dft2(out.values, +1, threads);
  out.values *= f.grid.pitch * f.grid.pitch / wavelength;
  return out;
}

double fresnel_critical_distance(const GridSpec& grid, double wavelength) {
  check_wavelength(wavelength);
  return std::max(grid.nx, grid.ny) * grid.pitch * grid.pitch / wavelength;
}

ComplexField fresnel_single_transform(const ComplexField& f, double z,
                                      double wavelength, int threads) {
  require_square_even(f.grid, "fresnel");
  check_wavelength(wavelength);
  if (z == 0.0) throw std::invalid_argument("fresnel: z must be nonzero");
  if (std::abs(z) < fresnel_critical_distance(f.grid, wavelength))
    throw std::invalid_argument("use angular-spectrum regime");

  const int n = f.grid.nx;
  const double lambda_z = wavelength * z;
  const double pitch_out = wavelength * std::abs(z) / (n * f.grid.pitch);

  ComplexField out;
  out.grid = f.grid;
  out.plane = f.plane;
  out.values = f.values;
  apply_chirp(out, lambda_z, threads);
  centered_dft2(out.values, z > 0 ? +1 : -1, threads);
  out.grid = make_centered_grid(n, n, pitch_out);
  out.plane = PlaneTag::Fresnel;
  apply_chirp(out, lambda_z, threads);
  // 1/(i*lambda*z) Fresnel prefactor times the pitch^2 quadrature weight.
  out.values *= Complex(0.0, -1.0) * (f.grid.pitch * f.grid.pitch / lambda_z);
  return out;
}

ComplexField fresnel_angular_spectrum(const ComplexField& f, double z,
                                      double wavelength, int threads) {
  validate(f.grid);
  check_wavelength(wavelength);
  if (z == 0.0) throw std::invalid_argument("fresnel: z must be nonzero");

  const GridSpec& g = f.grid;
  ComplexField out = f;
  fft2(out.values, threads);
  const double dfx = 1.0 / (g.nx * g.pitch);
  const double dfy = 1.0 / (g.ny * g.pitch);
  parallel_for(g.ny, threads, [&](long c0, long c1) {
    for (long ky = c0; ky < c1; ++ky) {
      const long sy = ky <= g.ny / 2 ? ky : ky - g.ny;
      const double fy = sy * dfy;
      for (int kx = 0; kx < g.nx; ++kx) {
        const long sx = kx <= g.nx / 2 ? kx : kx - g.nx;
        const double fx = sx * dfx;
        const double phase = M_PI * wavelength * z * (fx * fx + fy * fy);
        out.values(kx, ky) *= Complex(std::cos(phase), std::sin(phase));
      }
    }
  });
  ifft2(out.values, threads);
  out.plane = PlaneTag::Fresnel;
  return out;
}

ComplexField fresnel(const ComplexField& f, double z, double wavelength,
                     int threads) {
  if (z == 0.0) throw std::invalid_argument("fresnel: z must be nonzero");
  if (std::abs(z) < fresnel_critical_distance(f.grid, wavelength))
    return fresnel_angular_spectrum(f, z, wavelength, threads);
  return fresnel_single_transform(f, z, wavelength, threads);
}

double order_angle(int n, double period, double wavelength) {
  if (!(period > 0.0)) throw std::invalid_argument("order_angle: period must be positive");
  check_wavelength(wavelength);
  return n * wavelength / period;
}

ComplexField select_order(const ComplexField& far, int n, double period,
                          double wavelength, double radius) {
  validate(far.grid);
  if (far.plane != PlaneTag::Fraunhofer)
    throw std::invalid_argument("select_order requires a fraunhofer-plane field");
  if (!(radius > 0.0))
    throw std::invalid_argument("select_order: radius must be positive");
  // Order n of a +x carrier lands at angle -n*lambda/period (see header).
  const double cx = -order_angle(n, period, wavelength);
  const double cy = 0.0;
  const GridSpec& g = far.grid;
  const bool inside = cx - radius >= g.x(0) && cx + radius <= g.x(g.nx - 1) &&
                      cy - radius >= g.y(0) && cy + radius <= g.y(g.ny - 1);
  // A disk that swallows the whole grid is a legal (identity-like) selection;
  // a partially overhanging one would silently clip the order.
  const double r2max = radius * radius;
  auto corner_in = [&](double x, double y) {
    const double dx = x - cx, dy = y - cy;
    return dx * dx + dy * dy <= r2max;
  };
  const bool covers = corner_in(g.x(0), g.y(0)) && corner_in(g.x(g.nx - 1), g.y(0)) &&
                      corner_in(g.x(0), g.y(g.ny - 1)) &&
                      corner_in(g.x(g.nx - 1), g.y(g.ny - 1));
  if (!inside && !covers)
    throw std::invalid_argument("select_order: disk exits grid");

  ComplexField out = far;
  const double r2 = radius * radius;
  for (int iy = 0; iy < g.ny; ++iy) {
    const double dy = g.y(iy) - cy;
    for (int ix = 0; ix < g.nx; ++ix) {
      const double dx = g.x(ix) - cx;
      if (dx * dx + dy * dy > r2) out.values(ix, iy) = 0.0;
    }
  }
  return out;
}

}  // namespace evb
