#pragma once

#include <functional>
#include <vector>

namespace evb {

/// Bessel function of the first kind, integer order. Evaluated by Miller's
/// downward recurrence with the even-order normalization sum, rescaled on the
/// fly so intermediate growth never overflows. Cost O(max(|order|, x)).
double bessel_j(int order, double x);

/// Orthonormal Laguerre function
///   sqrt(p! / Gamma(p+alpha+1)) * x^(alpha/2) * exp(-x/2) * L_p^alpha(x),
/// evaluated by the symmetric three-term recurrence with power-of-two
/// exponent tracking, so it stays finite for p up to 1e5 and alpha up to 1e3
/// even where the unweighted polynomial would overflow by thousands of
/// orders of magnitude.
double laguerre_orthonormal(int p, int alpha, double x);

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Gauss-Legendre rule computed by Newton iteration on the Legendre
/// recurrence; nodes accurate to machine precision.
GaussRule gauss_legendre(int n);

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

/// Globally adaptive Gauss-Kronrod 7-15 quadrature on [a, b]: repeatedly
/// bisects the segment with the largest error estimate.
QuadResult adaptive_gauss_kronrod(const std::function<double(double)>& f,
                                  double a, double b, double abs_tol,
                                  double rel_tol, int max_segments = 2000);

}  // namespace evb
