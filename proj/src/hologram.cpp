#include "evb/hologram.hpp"

#include <cmath>
#include <stdexcept>

#include "evb/field.hpp"
#include "evb/parallel.hpp"
#include "evb/pgm.hpp"

namespace evb {

void validate(const HologramSpec& spec) {
  if (!(spec.period > 0.0))
    throw std::invalid_argument("hologram: period must be positive");
  if (spec.modulation_depth < 0.0)
    throw std::invalid_argument("hologram: modulation depth must be >= 0");
  if (spec.base_thickness < 0.0)
    throw std::invalid_argument("hologram: base thickness must be >= 0");
  if (!(spec.aperture_radius > 0.0))
    throw std::invalid_argument("hologram: aperture radius must be positive");
  if (spec.dead_zone_radius < 0.0 || spec.dead_zone_radius >= spec.aperture_radius)
    throw std::invalid_argument("hologram: dead zone must be smaller than aperture");
}

ThicknessMap synthesize_thickness(const HologramSpec& spec, const GridSpec& grid,
                                  int threads) {
  validate(spec);
  validate(grid);
  if (grid.pitch > spec.period / 4.0)
    throw std::invalid_argument("carrier undersampled");

  ThicknessMap map;
  map.grid = grid;
  map.t.resize(grid.nx, grid.ny);
  const double m = spec.winding;
  const double kx = 2.0 * M_PI / spec.period;
  parallel_for(grid.ny, threads, [&](long y0, long y1) {
    for (long iy = y0; iy < y1; ++iy) {
      const double y = grid.y(static_cast<int>(iy));
      for (int ix = 0; ix < grid.nx; ++ix) {
        const double x = grid.x(ix);
        const double phi = std::atan2(y, x);
        map.t(ix, iy) = spec.base_thickness +
                        0.5 * spec.modulation_depth * (1.0 + std::cos(m * phi + kx * x));
      }
    }
  });
  return map;
}

ThicknessMap load_thickness_map(const std::filesystem::path& path, double pitch,
                                double scale) {
  if (!(pitch > 0.0))
    throw std::invalid_argument("thickness map: pitch must be positive");
  if (!(scale > 0.0))
    throw std::invalid_argument("thickness map: scale must be positive");
  const Pgm16 img = read_pgm16(path);
  ThicknessMap map;
  map.grid = make_centered_grid(img.width, img.height, pitch);
  map.t.resize(img.width, img.height);
  for (int iy = 0; iy < img.height; ++iy)
    for (int ix = 0; ix < img.width; ++ix)
      map.t(ix, iy) = scale * img.at(ix, iy);
  return map;
}

void save_thickness_pgm(const std::filesystem::path& path, const ThicknessMap& map,
                        double scale) {
  if (!(scale > 0.0))
    throw std::invalid_argument("thickness map: scale must be positive");
  Pgm16 img;
  img.width = map.grid.nx;
  img.height = map.grid.ny;
  img.pixels.resize(static_cast<size_t>(img.width) * img.height);
  char buf[64];
  std::snprintf(buf, sizeof buf, "scale_m_per_level %.17g", scale);
  img.comments.push_back(buf);
  std::snprintf(buf, sizeof buf, "pitch_m %.17g", map.grid.pitch);
  img.comments.push_back(buf);
  for (int iy = 0; iy < img.height; ++iy)
    for (int ix = 0; ix < img.width; ++ix) {
      const double level = std::round(map.t(ix, iy) / scale);
      img.at(ix, iy) = static_cast<std::uint16_t>(std::min(65535.0, std::max(0.0, level)));
    }
  write_pgm16(path, img);
}

ComplexField transmission(const ThicknessMap& map, const BeamParams& beam,
                          const HologramSpec& spec, int threads) {
  validate(spec);
  validate(map.grid);
  const double sigma = interaction_constant(beam);
  const GridSpec& g = map.grid;
  ComplexField f = make_field(g, PlaneTag::HologramExit);
  const double r_in2 = spec.dead_zone_radius * spec.dead_zone_radius;
  const double r_out2 = spec.aperture_radius * spec.aperture_radius;
  parallel_for(g.ny, threads, [&](long y0, long y1) {
    for (long iy = y0; iy < y1; ++iy) {
      const double y = g.y(static_cast<int>(iy));
      for (int ix = 0; ix < g.nx; ++ix) {
        const double x = g.x(ix);
        const double r2 = x * x + y * y;
        if (r2 > r_out2 || (r_in2 > 0.0 && r2 <= r_in2)) continue;  // opaque
        const double chi = sigma * spec.mean_inner_potential * map.t(ix, iy);
        f.values(ix, iy) = Complex(std::cos(chi), std::sin(chi));
      }
    }
  });
  return f;
}

ComplexField gaussian_illumination(const GridSpec& grid, double waist) {
  validate(grid);
  if (!(waist > 0.0))
    throw std::invalid_argument("illumination: waist must be positive");
  ComplexField f = make_field(grid);
  for (int iy = 0; iy < grid.ny; ++iy) {
    const double y = grid.y(iy);
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double x = grid.x(ix);
      f.values(ix, iy) = std::exp(-(x * x + y * y) / (waist * waist));
    }
  }
  return normalize(std::move(f));
}

ComplexField exit_wave(const ComplexField& illum, const ComplexField& trans) {
  if (!illum.grid.same_lattice(trans.grid))
    throw std::invalid_argument("exit_wave: grid mismatch");
  ComplexField out = illum;
  out.values *= trans.values;
  out.plane = PlaneTag::HologramExit;
  return out;
}

}  // namespace evb
