#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "evb/field.hpp"
#include "evb/field_io.hpp"
#include "test_helpers.hpp"

using namespace evb;

TEST_CASE("total_power of a unit-amplitude 2x2 field with pitch 1 is 4") {
  GridSpec g;
  g.nx = g.ny = 2;
  g.pitch = 1.0;
  ComplexField f = make_field(g);
  f.values.setConstant(Complex(1.0, 0.0));
  CHECK(total_power(f) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("normalize produces unit power and is idempotent") {
  const GridSpec g = make_centered_grid(64, 64, 0.5e-6);
  ComplexField f = test::gaussian_vortex(g, 4e-6, 0);
  const ComplexField n1 = normalize(f);
  CHECK(total_power(n1) == doctest::Approx(1.0).epsilon(1e-12));
  const ComplexField n2 = normalize(n1);
  CHECK(total_power(n2) == doctest::Approx(1.0).epsilon(1e-12));
  const double diff = (n2.values - n1.values).abs().maxCoeff();
  CHECK(diff <= 1e-12 * n1.values.abs().maxCoeff());
}

TEST_CASE("normalize rejects a zero field") {
  ComplexField f = make_field(make_centered_grid(8, 8, 1.0));
  CHECK_THROWS_WITH_AS(normalize(f), "degenerate field", std::invalid_argument);
}

TEST_CASE("pure-phase multiplication preserves power") {
  test::Rng rng(11);
  const GridSpec g = make_centered_grid(32, 48, 1e-6);
  ComplexField f = make_field(g);
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    f.values.data()[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  const double before = total_power(f);
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    f.values.data()[i] *= std::polar(1.0, rng.uniform(0, 2 * M_PI));
  CHECK(total_power(f) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("resample_polar of a constant field is constant") {
  const GridSpec g = make_centered_grid(64, 64, 1.0);
  ComplexField f = make_field(g);
  f.values.setConstant(Complex(0.5, -0.25));
  const PolarField p = resample_polar(f, {0, 0}, 16, 32, 20.0);
  CHECK((p.values - Complex(0.5, -0.25)).abs().maxCoeff() < 1e-14);
}

TEST_CASE("resample_polar of exp(i 3 phi) winds exactly three times") {
  const GridSpec g = make_centered_grid(128, 128, 1.0);
  ComplexField f = test::gaussian_vortex(g, 1e9, 3);  // flat amplitude vortex
  const PolarField p = resample_polar(f, {0, 0}, 8, 256, 50.0);
  for (int i = 2; i < p.n_r; ++i) {  // skip radii within a couple of pixels
    double unwrapped = 0.0;
    double prev = std::arg(p.values(i, 0));
    for (int k = 1; k <= p.n_phi; ++k) {
      const double cur = std::arg(p.values(i, k % p.n_phi));
      double d = cur - prev;
      while (d > M_PI) d -= 2 * M_PI;
      while (d < -M_PI) d += 2 * M_PI;
      unwrapped += d;
      prev = cur;
    }
    CHECK(std::lround(unwrapped / (2 * M_PI)) == 3);
  }
}

TEST_CASE("resample_polar of a radially symmetric field is azimuthally flat") {
  const GridSpec g = make_centered_grid(256, 256, 1.0);
  const double w = 60.0;
  const ComplexField f = test::gaussian_vortex(g, w, 0);
  const double r_max = 100.0;
  const int n_r = 25;
  const PolarField p = resample_polar(f, {0, 0}, n_r, 64, r_max);
  for (int i = 0; i < n_r; ++i) {
    if (p.r(i) < 4.0 * g.pitch) continue;
    double mean = 0.0;
    for (int k = 0; k < p.n_phi; ++k) mean += std::norm(p.values(i, k));
    mean /= p.n_phi;
    double var = 0.0;
    for (int k = 0; k < p.n_phi; ++k) {
      const double d = std::norm(p.values(i, k)) - mean;
      var += d * d;
    }
    var /= p.n_phi;
    CHECK(var < 1e-6 * mean * mean);
  }
}

TEST_CASE("resample_polar rejects windows larger than the grid") {
  const GridSpec g = make_centered_grid(64, 64, 1.0);
  ComplexField f = make_field(g);
  f.values.setConstant(1.0);
  CHECK_THROWS_WITH_AS(resample_polar(f, {0, 0}, 8, 32, 40.0),
                       "polar window exceeds grid", std::invalid_argument);
  CHECK_THROWS_AS(resample_polar(f, {0, 0}, 8, 33, 10.0), std::invalid_argument);
}

TEST_CASE("cfld round trip is bit exact and rejects wrong magic") {
  test::Rng rng(7);
  const GridSpec g = make_centered_grid(6, 4, 2.5e-9);
  ComplexField f = make_field(g, PlaneTag::Fraunhofer);
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    f.values.data()[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));

  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / "evb_test_roundtrip.cfld";
  write_cfld(path, f);
  const ComplexField back = read_cfld(path);
  CHECK(back.grid.nx == f.grid.nx);
  CHECK(back.grid.ny == f.grid.ny);
  CHECK(back.grid.pitch == f.grid.pitch);
  CHECK(back.grid.origin == f.grid.origin);
  CHECK(back.plane == f.plane);
  CHECK((back.values == f.values).all());

  const auto bad = dir / "evb_test_badmagic.cfld";
  std::ofstream(bad, std::ios::binary) << "NOTCFLD1 some garbage";
  CHECK_THROWS_AS(read_cfld(bad), std::runtime_error);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}
