#pragma once

#include <vector>

#include "evb/types.hpp"

namespace evb {

/// Winding-number histogram. weights[i] belongs to m = m_min + i and sums
/// to 1. `mean` is the weighted mean of m; `sem` is the weighted standard
/// deviation divided by sqrt(N_eff), where N_eff is the Kish effective number
/// of polar rings contributing power.
struct OAMSpectrum {
  int m_min = 0;
  Eigen::ArrayXd weights;
  double mean = 0.0;
  double sem = 0.0;

  int m_max() const { return m_min + static_cast<int>(weights.size()) - 1; }
  double weight_at(int m) const;
};

/// Intensity-weighted center of mass, physical coordinates.
/// Throws "degenerate field" on zero power.
Eigen::Vector2d centroid(const ComplexField& f);

/// Azimuthal Fourier power spectrum: resamples to polar about `center`,
/// transforms each ring along phi, and combines rings with the power measure
/// r*dr. m runs over [-n_phi/2, n_phi/2).
OAMSpectrum oam_spectrum(const ComplexField& f, const Eigen::Vector2d& center,
                         int n_r, int n_phi, double r_max);

/// Same computation starting from an existing polar resampling.
OAMSpectrum oam_spectrum(const PolarField& polar);

/// One entry per 2x2 plaquette with nonzero phase circulation. (ix, iy) is
/// the plaquette's lower corner sample.
struct SingularityMap {
  struct Charge {
    int ix = 0;
    int iy = 0;
    int q = 0;
  };
  GridSpec grid;
  std::vector<Charge> charges;
};

/// Sums the four wrapped corner-to-corner phase steps of every plaquette and
/// reports q = round(sum/2pi) where nonzero. Plaquettes whose dimmest corner
/// falls below threshold * max|psi|^2 are skipped; pass threshold = 0 to keep
/// every plaquette (then the total charge inside any contour equals the
/// boundary phase winding exactly). Corner phase steps of exactly pi have no
/// defined winding direction; generic fields never produce them, but exactly
/// symmetric synthetic ones can.
SingularityMap singularity_map(const ComplexField& f, double threshold = 1e-4);

/// Sum of plaquette charges whose centers lie inside the disk
/// (physical coordinates).
int enclosed_charge(const SingularityMap& map, const Eigen::Vector2d& center,
                    double radius);

struct RadialProfile {
  Eigen::ArrayXd r;          // bin centers, meters (or radians)
  Eigen::ArrayXd intensity;  // mean |psi|^2 per bin
};

/// Azimuthal average of |psi|^2 in n_bins equal-width annuli out to the
/// nearest grid edge; annuli beyond it would be clipped and are not reported.
RadialProfile radial_profile(const ComplexField& f, const Eigen::Vector2d& center,
                             int n_bins);

}  // namespace evb
