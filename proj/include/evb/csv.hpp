#pragma once

#include <filesystem>

#include "evb/modal.hpp"
#include "evb/oam.hpp"

namespace evb {

// All writers emit a header line and one record per line, with numbers
// formatted as shortest round-trip decimals ("%.17g") so files are
// byte-stable across runs and thread counts.

void write_oam_spectrum_csv(const std::filesystem::path& path, const OAMSpectrum& s);
void write_singularities_csv(const std::filesystem::path& path, const SingularityMap& m);
void write_radial_profile_csv(const std::filesystem::path& path, const RadialProfile& p);
void write_radial_spectrum_csv(const std::filesystem::path& path, const RadialSpectrum& s);
void write_hygg_profile_csv(const std::filesystem::path& path,
                            const Eigen::ArrayXd& r, const Eigen::ArrayXcd& f);

}  // namespace evb
