#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "evb/beam.hpp"
#include "evb/hologram.hpp"
#include "evb/types.hpp"

namespace evb {

/// Parse/validation failure; `field` is "section.key" and the what() string
/// already names it, e.g. "hologram.period: missing unit suffix 'm' (line 7)".
struct ConfigError : std::runtime_error {
  std::string field;
  ConfigError(std::string field_, const std::string& message)
      : std::runtime_error(field_ + ": " + message), field(std::move(field_)) {}
};

enum class PropagationMode { Fraunhofer, Fresnel };

struct PropagationConfig {
  PropagationMode mode = PropagationMode::Fraunhofer;
  double defocus = 0.0;  // meters; required for fresnel
};

struct AnalysisConfig {
  int n_r = 256;
  int n_phi = 1024;
  double r_max_fraction = 0.95;        // of the largest safe polar radius
  int order = 1;                       // diffraction order to isolate; 0 = none
  double order_radius_fraction = 0.45; // of the first-order spacing
  double intensity_threshold = 1e-4;   // plaquette floor, fraction of peak
  bool center_auto = true;             // beam axis from intensity centroid
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
};

struct ModalConfig {
  int p_max = 20000;
  double z = 0.0;        // meters; hygg propagation distance
  double r_min = -1.0;   // meters; < 0 means "hologram dead-zone radius"
  double r_max = -1.0;   // meters; < 0 means "hologram aperture radius"
  double r_out_max = 0.0;  // meters; 0 means auto from the beam scale at z
  int n_samples = 400;
};

struct OutputConfig {
  std::string directory = "out";
  bool beam_stop = false;  // blank the zero order in rendered images only
  double thickness_scale = 0.0;  // meters per gray level; 0 means full range
};

struct RunConfig {
  GridSpec grid;
  BeamParams beam;
  HologramSpec hologram;
  std::optional<std::filesystem::path> thickness_map;  // measured map input
  double thickness_map_scale = 0.0;                    // meters per gray level
  PropagationConfig propagation;
  AnalysisConfig analysis;
  ModalConfig modal;
  OutputConfig output;
};

/// Parses the flat sectioned key-value format described in the README.
/// Unknown sections or keys are hard errors; dimensional values must carry
/// their unit suffix. Cross-field invariants (carrier sampling, stop radii,
/// power-of-two n_phi) are checked here as well.
RunConfig parse_config(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text);

}  // namespace evb
