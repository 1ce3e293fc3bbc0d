#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "evb/config.hpp"
#include "evb/csv.hpp"
#include "evb/field.hpp"
#include "evb/field_io.hpp"
#include "evb/hologram.hpp"
#include "evb/modal.hpp"
#include "evb/oam.hpp"
#include "evb/pgm.hpp"
#include "evb/propagation.hpp"

namespace fs = std::filesystem;
using namespace evb;

namespace {

struct Options {
  std::string config_path;
  std::string input_path;
  std::string out_dir = "out";
  int threads = 1;
  long seed = 0;  // reserved; no subcommand uses randomness
};

ThicknessMap make_thickness(const RunConfig& cfg, int threads) {
  if (cfg.thickness_map)
    return load_thickness_map(*cfg.thickness_map, cfg.grid.pitch,
                              cfg.thickness_map_scale);
  return synthesize_thickness(cfg.hologram, cfg.grid, threads);
}

void render_intensity_pgm(const fs::path& path, const ComplexField& f,
                          double stop_radius) {
  Pgm16 img;
  img.width = f.grid.nx;
  img.height = f.grid.ny;
  img.pixels.assign(static_cast<size_t>(img.width) * img.height, 0);
  Eigen::ArrayXXd inten = f.values.abs2();
  if (stop_radius > 0.0) {
    for (int iy = 0; iy < f.grid.ny; ++iy)
      for (int ix = 0; ix < f.grid.nx; ++ix) {
        const double x = f.grid.x(ix), y = f.grid.y(iy);
        if (x * x + y * y <= stop_radius * stop_radius) inten(ix, iy) = 0.0;
      }
  }
  const double peak = inten.maxCoeff();
  if (peak > 0.0) {
    for (int iy = 0; iy < f.grid.ny; ++iy)
      for (int ix = 0; ix < f.grid.nx; ++ix)
        img.at(ix, iy) =
            static_cast<std::uint16_t>(std::lround(65535.0 * inten(ix, iy) / peak));
  }
  write_pgm16(path, img);
}

double auto_thickness_scale(const RunConfig& cfg, const ThicknessMap& map) {
  if (cfg.output.thickness_scale > 0.0) return cfg.output.thickness_scale;
  const double t_max = map.t.maxCoeff();
  return t_max > 0.0 ? t_max / 65535.0 : 1e-12;
}

int cmd_synthesize(const RunConfig& cfg, const Options& opt) {
  const ThicknessMap map = make_thickness(cfg, opt.threads);
  save_thickness_pgm(fs::path(opt.out_dir) / "thickness.pgm", map,
                     auto_thickness_scale(cfg, map));
  const ComplexField trans = transmission(map, cfg.beam, cfg.hologram, opt.threads);
  write_cfld(fs::path(opt.out_dir) / "transmission.cfld", trans);
  return 0;
}

ComplexField propagate_field(const RunConfig& cfg, const Options& opt,
                             const ComplexField& input) {
  if (input.plane != PlaneTag::HologramExit)
    throw std::runtime_error("propagate: input must be a hologram-exit field");
  const ComplexField illum = gaussian_illumination(input.grid, cfg.beam.waist);
  const ComplexField exit = exit_wave(illum, input);
  const double lambda = electron_wavelength(cfg.beam);
  if (cfg.propagation.mode == PropagationMode::Fraunhofer)
    return fraunhofer(exit, lambda, opt.threads);
  return fresnel(exit, cfg.propagation.defocus, lambda, opt.threads);
}

int cmd_propagate(const RunConfig& cfg, const Options& opt) {
  const ComplexField input = read_cfld(opt.input_path.empty()
                                           ? fs::path(opt.out_dir) / "transmission.cfld"
                                           : fs::path(opt.input_path));
  const ComplexField out = propagate_field(cfg, opt, input);
  const bool far = cfg.propagation.mode == PropagationMode::Fraunhofer;
  const std::string stem = far ? "farfield" : "fresnel";
  write_cfld(fs::path(opt.out_dir) / (stem + ".cfld"), out);
  double stop_radius = 0.0;
  if (cfg.output.beam_stop && far) {
    const double lambda = electron_wavelength(cfg.beam);
    stop_radius = cfg.analysis.order_radius_fraction *
                  order_angle(1, cfg.hologram.period, lambda);
  }
  render_intensity_pgm(fs::path(opt.out_dir) / (stem + ".pgm"), out, stop_radius);
  return 0;
}

int cmd_analyze(const RunConfig& cfg, const Options& opt) {
  ComplexField field = read_cfld(opt.input_path.empty()
                                     ? fs::path(opt.out_dir) / "farfield.cfld"
                                     : fs::path(opt.input_path));
  const double lambda = electron_wavelength(cfg.beam);
  double selection_radius = 0.0;
  if (field.plane == PlaneTag::Fraunhofer && cfg.analysis.order != 0) {
    selection_radius = cfg.analysis.order_radius_fraction *
                       order_angle(1, cfg.hologram.period, lambda);
    field = select_order(field, cfg.analysis.order, cfg.hologram.period, lambda,
                         selection_radius);
  }
  const Eigen::Vector2d center =
      cfg.analysis.center_auto ? centroid(field) : cfg.analysis.center;
  const GridSpec& g = field.grid;
  const double margin =
      std::min(std::min(center.x() - g.x(0), g.x(g.nx - 1) - center.x()),
               std::min(center.y() - g.y(0), g.y(g.ny - 1) - center.y()));
  if (!(margin > 0.0)) throw std::runtime_error("analyze: beam axis outside grid");
  const double r_max = cfg.analysis.r_max_fraction * margin;

  const OAMSpectrum spectrum =
      oam_spectrum(field, center, cfg.analysis.n_r, cfg.analysis.n_phi, r_max);
  const SingularityMap singularities =
      singularity_map(field, cfg.analysis.intensity_threshold);
  const RadialProfile profile = radial_profile(field, center, cfg.analysis.n_r);
  // Winding count uses an unthresholded map so it always equals the boundary
  // phase circulation. The counting disk must stay inside the bright annulus:
  // past an order-selection mask the phase is identically zero and the edge
  // charges would cancel the core.
  const double charge_radius =
      selection_radius > 0.0 ? 0.5 * selection_radius : r_max;
  const int charge =
      enclosed_charge(singularity_map(field, 0.0), center, charge_radius);

  write_oam_spectrum_csv(fs::path(opt.out_dir) / "oam_spectrum.csv", spectrum);
  write_singularities_csv(fs::path(opt.out_dir) / "singularities.csv", singularities);
  write_radial_profile_csv(fs::path(opt.out_dir) / "radial_profile.csv", profile);

  int peak_index = 0;
  spectrum.weights.maxCoeff(&peak_index);
  std::ofstream summary(fs::path(opt.out_dir) / "summary.txt");
  char buf[256];
  std::snprintf(buf, sizeof buf, "peak_m %d\n", spectrum.m_min + peak_index);
  summary << buf;
  std::snprintf(buf, sizeof buf, "peak_weight %.17g\n",
                spectrum.weights[peak_index]);
  summary << buf;
  std::snprintf(buf, sizeof buf, "mean %.17g\n", spectrum.mean);
  summary << buf;
  std::snprintf(buf, sizeof buf, "sem %.17g\n", spectrum.sem);
  summary << buf;
  std::snprintf(buf, sizeof buf, "enclosed_charge %d\n", charge);
  summary << buf;
  std::snprintf(buf, sizeof buf, "analysis_radius %.17g\n", r_max);
  summary << buf;
  return 0;
}

int cmd_modal(const RunConfig& cfg, const Options& opt) {
  const RadialSpectrum spec = radial_spectrum(cfg.hologram.winding, cfg.modal.p_max);
  write_radial_spectrum_csv(fs::path(opt.out_dir) / "radial_spectrum.csv", spec);

  const double lambda = electron_wavelength(cfg.beam);
  const double w0 = cfg.beam.waist;
  const double rayleigh = M_PI * w0 * w0 / lambda;
  const double z = cfg.modal.z != 0.0 ? cfg.modal.z : rayleigh;
  const double r_min =
      cfg.modal.r_min >= 0.0 ? cfg.modal.r_min : cfg.hologram.dead_zone_radius;
  const double r_max =
      cfg.modal.r_max >= 0.0 ? cfg.modal.r_max : cfg.hologram.aperture_radius;
  double r_out = cfg.modal.r_out_max;
  if (r_out <= 0.0) {
    const double w_z = w0 * std::sqrt(1.0 + (z / rayleigh) * (z / rayleigh));
    r_out = (std::sqrt(std::abs(cfg.hologram.winding) / 2.0) + 4.0) * w_z;
  }
  Eigen::ArrayXd r(cfg.modal.n_samples);
  for (int i = 0; i < cfg.modal.n_samples; ++i)
    r[i] = r_out * (i + 1) / cfg.modal.n_samples;
  const Eigen::ArrayXcd f =
      hygg_radial(r, z, cfg.hologram.winding, w0, lambda, r_min, r_max);
  write_hygg_profile_csv(fs::path(opt.out_dir) / "hygg_profile.csv", r, f);
  return 0;
}

int cmd_pipeline(const RunConfig& cfg, const Options& opt) {
  int rc = cmd_synthesize(cfg, opt);
  if (rc != 0) return rc;
  Options next = opt;
  next.input_path.clear();  // each stage consumes the previous stage's file
  rc = cmd_propagate(cfg, next);
  if (rc != 0) return rc;
  if (cfg.propagation.mode == PropagationMode::Fresnel)
    next.input_path = (fs::path(opt.out_dir) / "fresnel.cfld").string();
  rc = cmd_analyze(cfg, next);
  if (rc != 0) return rc;
  next.input_path.clear();
  return cmd_modal(cfg, next);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fork-hologram synthesis, propagation and vortex-beam analysis"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--config", opt.config_path, "run configuration file")->required();
  app.add_option("--out", opt.out_dir, "output directory");
  app.add_option("--input", opt.input_path, "input field (.cfld)");
  app.add_option("--threads", opt.threads, "worker threads (never changes results)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "reserved; no randomness is used");

  auto* sub_synth = app.add_subcommand("synthesize", "thickness map and transmission");
  auto* sub_prop = app.add_subcommand("propagate", "exit wave to far field or defocus");
  auto* sub_analyze = app.add_subcommand("analyze", "OAM spectrum, singularities, profile");
  auto* sub_modal = app.add_subcommand("modal", "radial LG spectrum and radial amplitude");
  auto* sub_pipe = app.add_subcommand("pipeline", "run all stages in order");
  for (auto* sub : {sub_synth, sub_prop, sub_analyze, sub_modal, sub_pipe})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // --help keeps the full usage text
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: cli: %s\n", e.what());
    return 2;
  }

  try {
    const RunConfig cfg = parse_config(opt.config_path);
    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec)
      throw std::runtime_error("cannot create output directory " + opt.out_dir);
    if (sub_synth->parsed()) return cmd_synthesize(cfg, opt);
    if (sub_prop->parsed()) return cmd_propagate(cfg, opt);
    if (sub_analyze->parsed()) return cmd_analyze(cfg, opt);
    if (sub_modal->parsed()) return cmd_modal(cfg, opt);
    if (sub_pipe->parsed()) return cmd_pipeline(cfg, opt);
    return 2;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: cli: %s\n", e.what());
    return 1;
  }
}
