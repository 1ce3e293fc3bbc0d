#include <doctest.h>

#include <cmath>

#include "evb/modal.hpp"
#include "evb/special.hpp"
#include "test_helpers.hpp"

using namespace evb;

TEST_CASE("lg_radial: p=0, m=0 is sqrt(2/pi) exp(-rho^2)") {
  Eigen::ArrayXd rho(5);
  rho << 0.0, 0.2, 0.8, 1.5, 3.0;
  const Eigen::ArrayXd r = lg_radial(0, 0, rho);
  for (int i = 0; i < rho.size(); ++i)
    CHECK(r[i] == doctest::Approx(std::sqrt(2.0 / M_PI) * std::exp(-rho[i] * rho[i]))
                      .epsilon(1e-14));
}

TEST_CASE("lg_radial orthonormality by quadrature") {
  // 2 pi int lg(p) lg(p') rho drho = delta_{pp'} for several (p, p', m)
  struct Case {
    int p1, p2, m;
  };
  const Case cases[] = {{0, 0, 0},  {1, 1, 0},  {20, 20, 5}, {0, 1, 0},
                        {3, 7, 2},  {20, 19, 5}, {12, 12, 3}, {5, 5, 1}};
  for (const auto& c : cases) {
    const double cut = std::sqrt(2.0 * std::max(c.p1, c.p2) + c.m + 1.0) + 6.0;
    const auto f = [&](double rho) {
      Eigen::ArrayXd r(1);
      r << rho;
      return lg_radial(c.p1, c.m, r)[0] * lg_radial(c.p2, c.m, r)[0] * rho;
    };
    const QuadResult q = adaptive_gauss_kronrod(f, 0.0, cut, 1e-12, 1e-11, 4000);
    REQUIRE(q.converged);
    const double expect = c.p1 == c.p2 ? 1.0 : 0.0;
    CHECK(std::abs(2.0 * M_PI * q.value - expect) < 1e-8);
  }
}

TEST_CASE("lg_radial stays finite and nonzero at the p=4900, m=200 turning radius") {
  // classical turning point of L_p^a(2 rho^2): rho ~ sqrt(2p + a + 1)
  const double rho_turn = std::sqrt(2.0 * 4900 + 200 + 1.0);
  Eigen::ArrayXd rho(3);
  rho << 0.5 * rho_turn, rho_turn, 20.0;
  const Eigen::ArrayXd r = lg_radial(4900, 200, rho);
  for (int i = 0; i < 3; ++i) CHECK(std::isfinite(r[i]));
  CHECK(r[1] != 0.0);
  // magnitude near the turning point stays within the oscillatory envelope
  // of the orthonormal Laguerre functions (order-of-magnitude check)
  CHECK(std::abs(r[1]) < 1.0);
  CHECK(std::abs(r[1]) > 1e-6);
}

TEST_CASE("cp_coefficient closed forms for m=2 and m=1") {
  // m=2: c_p = 1/sqrt((p+1)(p+2))
  for (int p : {0, 1, 5, 40}) {
    CHECK(cp_coefficient(p, 2) ==
          doctest::Approx(1.0 / std::sqrt((p + 1.0) * (p + 2.0))).epsilon(1e-13));
  }
  CHECK(cp_coefficient(0, 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(cp_coefficient(0, 1) == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-14));
  CHECK(cp_coefficient(3, -2) == doctest::Approx(cp_coefficient(3, 2)).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(cp_coefficient(0, 0), "formula undefined for m=0",
                       std::invalid_argument);
}

TEST_CASE("m=2 weights telescope to one") {
  // sum 1/((p+1)(p+2)) = 1 exactly; partial sum to P leaves 1/(P+2)
  const int P = 1000;
  double sum = 0.0;
  for (int p = 0; p <= P; ++p) {
    const double c = cp_coefficient(p, 2);
    sum += c * c;
  }
  CHECK(sum == doctest::Approx(1.0 - 1.0 / (P + 2.0)).epsilon(1e-12));
  CHECK(sum > 0.999);
}

TEST_CASE("radial_spectrum normalization with tail for the tested m ladder") {
  for (int m : {1, 2, 3, 5, 10, 50, 200}) {
    const int p_max = std::max(2000, m * m);  // past the weight peak
    const RadialSpectrum s = radial_spectrum(m, p_max);
    const double total = s.weights.sum() + s.tail_bound;
    CHECK(std::abs(total - 1.0) < 1e-6);
  }
}

TEST_CASE("m=200 radial spectrum peaks at p=4900") {
  const RadialSpectrum s = radial_spectrum(200, 30000);
  int argmax = 0;
  s.weights.maxCoeff(&argmax);
  CHECK(argmax == 4900);
  CHECK(std::abs(argmax - 4900) <= 0.05 * 4900);
  // delocalized: the peak weight is a tiny fraction of the total
  CHECK(s.weights[argmax] < 1e-3);
}

TEST_CASE("cp_coefficient agrees with the quadrature oracle") {
  CHECK(overlap_oracle(2, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK(overlap_oracle(1, 0) == doctest::Approx(std::sqrt(M_PI) / 2.0).epsilon(1e-10));

  test::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = rng.integer(1, 5) * (rng.integer(0, 1) ? 1 : -1);
    const int p = rng.integer(0, 20);
    const double oracle = overlap_oracle(m, p);
    const double closed = cp_coefficient(p, m);
    CHECK(std::abs(oracle - closed) < 1e-8);
  }
}

TEST_CASE("hygg_radial: m=0 on-axis value has a closed form") {
  // at r=0 and m=0 the kernel is J_0(0)=1, leaving a complex Gaussian moment:
  // int_0^R exp(-c r'^2) r' dr' = (1 - exp(-c R^2)) / (2c)
  const double z = 1.0, lambda = 2.5e-12, w0 = 1e-6;
  const double r_max = 4e-6;
  Eigen::ArrayXd r(1);
  r << 0.0;
  const Eigen::ArrayXcd f = hygg_radial(r, z, 0, w0, lambda, 0.0, r_max);
  const std::complex<double> c(1.0 / (w0 * w0), M_PI / (z * lambda));
  const std::complex<double> moment =
      (1.0 - std::exp(-c * r_max * r_max)) / (2.0 * c);
  const std::complex<double> expect = moment / (z * lambda);
  CHECK(std::abs(f[0] - expect) < 1e-10 * std::abs(expect));
}

TEST_CASE("hygg_radial: truncating the inner region changes the near-axis profile") {
  const double lambda = 2.5e-12, w0 = 1e-6;
  const double z = M_PI * w0 * w0 / lambda;  // one Rayleigh range
  Eigen::ArrayXd r(40);
  for (int i = 0; i < 40; ++i) r[i] = (i + 1) * 0.15e-6;
  const Eigen::ArrayXcd full = hygg_radial(r, z, 1, w0, lambda, 0.0, 5e-6);
  const Eigen::ArrayXcd trunc = hygg_radial(r, z, 1, w0, lambda, 0.4e-6, 5e-6);
  const double scale = full.abs().maxCoeff();
  CHECK((full - trunc).abs().maxCoeff() > 0.01 * scale);
}

TEST_CASE("landau energy levels") {
  LandauParams lp;
  lp.field_tesla = 1.0;
  CHECK(lp.larmor_frequency() == doctest::Approx(8.79410005386e10).epsilon(1e-9));
  CHECK(landau_energy(0, 0, lp) ==
        doctest::Approx(constants::hbar * lp.larmor_frequency()).epsilon(1e-12));
  // negative m: 2p + m + |m| + 1 collapses to 2p + 1
  for (int p : {0, 1, 7})
    CHECK(landau_energy(p, -9, lp) ==
          doctest::Approx(constants::hbar * lp.larmor_frequency() * (2 * p + 1))
              .epsilon(1e-12));
  CHECK(landau_energy(0, 1, lp) == doctest::Approx(2.7822030218e-23).epsilon(1e-9));
}

TEST_CASE("magnetic moment is m Bohr magnetons, signed") {
  CHECK(magnetic_moment(0) == 0.0);
  CHECK(magnetic_moment(200) == 200.0);
  CHECK(magnetic_moment(-3) == -3.0);
}
