#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace evb {

using Complex = std::complex<double>;

/// Which plane a field lives in. For Fraunhofer fields the grid pitch is an
/// angle (radians per pixel) instead of a length.
enum class PlaneTag : std::uint8_t {
  HologramExit = 0,
  Fresnel = 1,
  Fraunhofer = 2,
};

/// Uniform rectangular sample lattice. `origin` is the physical coordinate of
/// the center of pixel (0, 0); pixel (ix, iy) sits at origin + pitch*(ix, iy).
struct GridSpec {
  int nx = 0;
  int ny = 0;
  double pitch = 0.0;  // meters per pixel (radians per pixel for Fraunhofer)
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();

  double x(int ix) const { return origin.x() + pitch * ix; }
  double y(int iy) const { return origin.y() + pitch * iy; }
  double extent_x() const { return nx * pitch; }
  double extent_y() const { return ny * pitch; }
  bool same_lattice(const GridSpec& o) const {
    return nx == o.nx && ny == o.ny && pitch == o.pitch && origin == o.origin;
  }
};

/// Grid whose pixel (n/2, n/2) sits exactly at the physical origin. All
/// centered transforms in this library use that convention: frequency bin k
/// maps to (k - n/2).
GridSpec make_centered_grid(int nx, int ny, double pitch);

/// Throws std::invalid_argument if nx, ny < 2 or pitch <= 0.
void validate(const GridSpec& grid);

/// Sampled complex scalar wavefunction. values(ix, iy); ix is the
/// fast (memory-contiguous) index, matching the row-major wire format
/// where x runs fastest within a scanline of constant y.
struct ComplexField {
  GridSpec grid;
  Eigen::ArrayXXcd values;  // shape (nx, ny)
  PlaneTag plane = PlaneTag::HologramExit;
};

ComplexField make_field(const GridSpec& grid, PlaneTag plane = PlaneTag::HologramExit);

/// Complex samples on a uniform polar lattice about `center` (physical
/// coordinates). r is uniform on (0, r_max]: r_i = (i+1) * r_max/n_r, so the
/// singular axis point r = 0 is never sampled. phi_k = 2*pi*k/n_phi.
struct PolarField {
  int n_r = 0;
  int n_phi = 0;  // power of two
  double r_max = 0.0;
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  Eigen::ArrayXXcd values;  // shape (n_r, n_phi); values(ir, iphi)

  double dr() const { return r_max / n_r; }
  double r(int ir) const { return (ir + 1) * dr(); }
  double phi(int iphi) const;
};

}  // namespace evb
