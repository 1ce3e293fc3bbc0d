#include "evb/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace evb {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

using Table = std::map<std::string, Entry>;  // key "section.key"

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Table tokenize(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config", "unterminated section header (line " +
                                        std::to_string(lineno) + ")");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError("config", "empty section name (line " +
                                        std::to_string(lineno) + ")");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config", "expected 'key = value' (line " +
                                      std::to_string(lineno) + ")");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || section.empty())
      throw ConfigError("config", "key outside a [section] (line " +
                                      std::to_string(lineno) + ")");
    const std::string full = section + "." + key;
    if (table.count(full))
      throw ConfigError(full, "duplicate key (line " + std::to_string(lineno) + ")");
    table[full] = Entry{value, lineno, false};
  }
  return table;
}

class Reader {
 public:
  explicit Reader(Table table) : table_(std::move(table)) {}

  bool has(const std::string& key) const { return table_.count(key) > 0; }

  std::string raw(const std::string& key) {
    auto it = table_.find(key);
    if (it == table_.end()) throw ConfigError(key, "missing required key");
    it->second.used = true;
    return it->second.value;
  }

  int line(const std::string& key) const {
    auto it = table_.find(key);
    return it == table_.end() ? 0 : it->second.line;
  }

  std::string where(const std::string& key) const {
    return " (line " + std::to_string(line(key)) + ")";
  }

  // value with a mandatory unit suffix, e.g. "30e-9 m"
  double quantity(const std::string& key, const std::string& unit) {
    const std::string v = raw(key);
    std::istringstream ss(v);
    double x = 0.0;
    std::string u, extra;
    if (!(ss >> x) || !std::isfinite(x))
      throw ConfigError(key, "expected '<number> " + unit + "'" + where(key));
    if (!(ss >> u))
      throw ConfigError(key, "missing unit suffix '" + unit + "'" + where(key));
    if (ss >> extra)
      throw ConfigError(key, "trailing garbage after value" + where(key));
    if (u != unit)
      throw ConfigError(key, "expected unit '" + unit + "', got '" + u + "'" + where(key));
    return x;
  }

  double quantity_or(const std::string& key, const std::string& unit, double dflt) {
    return has(key) ? quantity(key, unit) : dflt;
  }

  double number(const std::string& key) {
    const std::string v = raw(key);
    std::istringstream ss(v);
    double x = 0.0;
    std::string extra;
    if (!(ss >> x) || (ss >> extra) || !std::isfinite(x))
      throw ConfigError(key, "expected a dimensionless number" + where(key));
    return x;
  }

  double number_or(const std::string& key, double dflt) {
    return has(key) ? number(key) : dflt;
  }

  int integer(const std::string& key) {
    const double x = number(key);
    if (x != std::floor(x) || std::abs(x) > 2e9)
      throw ConfigError(key, "expected an integer" + where(key));
    return static_cast<int>(x);
  }

  int integer_or(const std::string& key, int dflt) {
    return has(key) ? integer(key) : dflt;
  }

  bool boolean_or(const std::string& key, bool dflt) {
    if (!has(key)) return dflt;
    const std::string v = raw(key);
    if (v == "true") return true;
    if (v == "false") return false;
    throw ConfigError(key, "expected 'true' or 'false'" + where(key));
  }

  void check_all_used() const {
    for (const auto& [key, entry] : table_)
      if (!entry.used)
        throw ConfigError(key, "unknown key (line " + std::to_string(entry.line) + ")");
  }

 private:
  Table table_;
};

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  Reader r(tokenize(text));
  RunConfig cfg;

  const int nx = r.integer("grid.nx");
  const int ny = r.integer("grid.ny");
  const double pitch = r.quantity("grid.pitch", "m");
  if (nx < 2 || ny < 2) throw ConfigError("grid.nx", "grid must be at least 2x2");
  if (!(pitch > 0.0)) throw ConfigError("grid.pitch", "pitch must be positive");
  cfg.grid = make_centered_grid(nx, ny, pitch);

  cfg.beam.kinetic_energy_ev = r.quantity("beam.kinetic_energy", "eV");
  cfg.beam.rest_energy_ev =
      r.quantity_or("beam.rest_energy", "eV", constants::electron_rest_energy_ev);
  cfg.beam.waist = r.quantity("beam.waist", "m");
  if (!(cfg.beam.kinetic_energy_ev > 0.0))
    throw ConfigError("beam.kinetic_energy", "must be positive");
  if (!(cfg.beam.waist > 0.0)) throw ConfigError("beam.waist", "must be positive");

  cfg.hologram.winding = r.integer("hologram.m");
  cfg.hologram.period = r.quantity("hologram.period", "m");
  cfg.hologram.modulation_depth = r.quantity("hologram.modulation_depth", "m");
  cfg.hologram.base_thickness = r.quantity_or("hologram.base_thickness", "m", 0.0);
  cfg.hologram.mean_inner_potential = r.quantity("hologram.mean_inner_potential", "V");
  cfg.hologram.aperture_radius = r.quantity("hologram.aperture_radius", "m");
  cfg.hologram.dead_zone_radius = r.quantity_or("hologram.dead_zone_radius", "m", 0.0);
  if (!(cfg.hologram.period > 0.0))
    throw ConfigError("hologram.period", "must be positive");
  if (cfg.hologram.modulation_depth < 0.0)
    throw ConfigError("hologram.modulation_depth", "must be >= 0");
  if (cfg.hologram.base_thickness < 0.0)
    throw ConfigError("hologram.base_thickness", "must be >= 0");
  if (!(cfg.hologram.aperture_radius > 0.0))
    throw ConfigError("hologram.aperture_radius", "must be positive");
  if (cfg.hologram.dead_zone_radius < 0.0 ||
      cfg.hologram.dead_zone_radius >= cfg.hologram.aperture_radius)
    throw ConfigError("hologram.dead_zone_radius", "must be in [0, aperture_radius)");
  if (cfg.grid.pitch > cfg.hologram.period / 4.0)
    throw ConfigError("hologram.period", "carrier undersampled");

  if (r.has("hologram.thickness_map")) {
    cfg.thickness_map = r.raw("hologram.thickness_map");
    cfg.thickness_map_scale = r.quantity("hologram.thickness_scale", "m");
    if (!(cfg.thickness_map_scale > 0.0))
      throw ConfigError("hologram.thickness_scale", "must be positive");
  }

  if (r.has("propagation.mode")) {
    const std::string mode = r.raw("propagation.mode");
    if (mode == "fraunhofer") {
      cfg.propagation.mode = PropagationMode::Fraunhofer;
    } else if (mode == "fresnel") {
      cfg.propagation.mode = PropagationMode::Fresnel;
      cfg.propagation.defocus = r.quantity("propagation.defocus", "m");
      if (cfg.propagation.defocus == 0.0)
        throw ConfigError("propagation.defocus", "must be nonzero");
    } else {
      throw ConfigError("propagation.mode",
                        "expected 'fraunhofer' or 'fresnel'" + r.where("propagation.mode"));
    }
  }

  cfg.analysis.n_r = r.integer_or("analysis.n_r", cfg.analysis.n_r);
  cfg.analysis.n_phi = r.integer_or("analysis.n_phi", cfg.analysis.n_phi);
  if (cfg.analysis.n_r < 1) throw ConfigError("analysis.n_r", "must be >= 1");
  if (cfg.analysis.n_phi < 2 || (cfg.analysis.n_phi & (cfg.analysis.n_phi - 1)))
    throw ConfigError("analysis.n_phi", "must be a power of two");
  cfg.analysis.r_max_fraction =
      r.number_or("analysis.r_max_fraction", cfg.analysis.r_max_fraction);
  if (!(cfg.analysis.r_max_fraction > 0.0) || cfg.analysis.r_max_fraction > 1.0)
    throw ConfigError("analysis.r_max_fraction", "must be in (0, 1]");
  cfg.analysis.order = r.integer_or("analysis.order", cfg.analysis.order);
  cfg.analysis.order_radius_fraction =
      r.number_or("analysis.order_radius_fraction", cfg.analysis.order_radius_fraction);
  if (!(cfg.analysis.order_radius_fraction > 0.0))
    throw ConfigError("analysis.order_radius_fraction", "must be positive");
  cfg.analysis.intensity_threshold =
      r.number_or("analysis.intensity_threshold", cfg.analysis.intensity_threshold);
  if (cfg.analysis.intensity_threshold < 0.0)
    throw ConfigError("analysis.intensity_threshold", "must be >= 0");
  if (r.has("analysis.center")) {
    const std::string v = r.raw("analysis.center");
    if (v != "auto") {
      std::istringstream ss(v);
      double x = 0, y = 0;
      std::string unit, extra;
      if (!(ss >> x >> y >> unit) || (ss >> extra) || (unit != "m" && unit != "rad"))
        throw ConfigError("analysis.center",
                          "expected 'auto' or '<x> <y> m|rad'" + r.where("analysis.center"));
      cfg.analysis.center_auto = false;
      cfg.analysis.center = Eigen::Vector2d(x, y);
    }
  }

  cfg.modal.p_max = r.integer_or("modal.p_max", cfg.modal.p_max);
  if (cfg.modal.p_max < 1) throw ConfigError("modal.p_max", "must be >= 1");
  cfg.modal.z = r.quantity_or("modal.z", "m", 0.0);
  cfg.modal.r_min = r.quantity_or("modal.r_min", "m", -1.0);
  cfg.modal.r_max = r.quantity_or("modal.r_max", "m", -1.0);
  cfg.modal.r_out_max = r.quantity_or("modal.r_out_max", "m", 0.0);
  cfg.modal.n_samples = r.integer_or("modal.n_samples", cfg.modal.n_samples);
  if (cfg.modal.n_samples < 2) throw ConfigError("modal.n_samples", "must be >= 2");

  if (r.has("output.directory")) cfg.output.directory = r.raw("output.directory");
  cfg.output.beam_stop = r.boolean_or("output.beam_stop", false);
  cfg.output.thickness_scale = r.quantity_or("output.thickness_scale", "m", 0.0);

  r.check_all_used();
  return cfg;
}

RunConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace evb
