#include "evb/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace evb {

namespace {

struct File {
  std::FILE* fp;
  explicit File(const std::filesystem::path& path) : fp(std::fopen(path.string().c_str(), "wb")) {
    if (!fp) throw std::runtime_error("csv: cannot open " + path.string());
  }
  ~File() {
    if (fp) std::fclose(fp);
  }
  File(const File&) = delete;
  File& operator=(const File&) = delete;
};

}  // namespace

void write_oam_spectrum_csv(const std::filesystem::path& path, const OAMSpectrum& s) {
  File f(path);
  std::fprintf(f.fp, "m,weight\n");
  for (int i = 0; i < s.weights.size(); ++i)
    std::fprintf(f.fp, "%d,%.17g\n", s.m_min + i, s.weights[i]);
}

void write_singularities_csv(const std::filesystem::path& path, const SingularityMap& m) {
  File f(path);
  std::fprintf(f.fp, "ix,iy,q\n");
  for (const auto& c : m.charges) std::fprintf(f.fp, "%d,%d,%d\n", c.ix, c.iy, c.q);
}

void write_radial_profile_csv(const std::filesystem::path& path, const RadialProfile& p) {
  File f(path);
  std::fprintf(f.fp, "r_meters,intensity\n");
  for (int i = 0; i < p.r.size(); ++i)
    std::fprintf(f.fp, "%.17g,%.17g\n", p.r[i], p.intensity[i]);
}

void write_radial_spectrum_csv(const std::filesystem::path& path, const RadialSpectrum& s) {
  File f(path);
  std::fprintf(f.fp, "p,weight\n");
  for (int p = 0; p < s.weights.size(); ++p)
    std::fprintf(f.fp, "%d,%.17g\n", p, s.weights[p]);
}

void write_hygg_profile_csv(const std::filesystem::path& path,
                            const Eigen::ArrayXd& r, const Eigen::ArrayXcd& f) {
  if (r.size() != f.size()) throw std::invalid_argument("csv: hygg arrays differ in length");
  File file(path);
  std::fprintf(file.fp, "r_meters,re,im\n");
  for (int i = 0; i < r.size(); ++i)
    std::fprintf(file.fp, "%.17g,%.17g,%.17g\n", r[i], f[i].real(), f[i].imag());
}

}  // namespace evb
