#include "evb/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evb {

double bessel_j(int order, double x) {
  // Reduce to order >= 0, x >= 0 via J_{-n}(x) = (-1)^n J_n(x) and
  // J_n(-x) = (-1)^n J_n(x).
  double sign = 1.0;
  if (order < 0) {
    order = -order;
    if (order % 2) sign = -sign;
  }
  if (x < 0.0) {
    x = -x;
    if (order % 2) sign = -sign;
  }
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;

  // Start the downward pass well inside the decaying-order regime; the
  // x^(1/3) term covers the turning-point transition width.
  const int base = std::max(order, static_cast<int>(std::ceil(x)));
  int start = base + 24 + 2 * static_cast<int>(std::ceil(3.0 * std::cbrt(static_cast<double>(base))));
  if (start % 2) ++start;

  const double rescale = 1e-250, inv_rescale = 1e250;
  double jp = 0.0;        // J_{k+1} (unnormalized)
  double jc = 1e-300;     // J_k
  double target = 0.0;    // unnormalized J_order
  double norm = 0.0;      // J_0 + 2*sum_{k>=1} J_{2k}
  if (order == start) target = jc;
  for (int k = start; k >= 1; --k) {
    const double jm = (2.0 * k / x) * jc - jp;  // J_{k-1}
    jp = jc;
    jc = jm;
    if (k - 1 == order) target = jc;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? jc : 2.0 * jc;
    if (std::abs(jc) > inv_rescale) {
      jc *= rescale;
      jp *= rescale;
      norm *= rescale;
      target *= rescale;
    }
  }
  return sign * target / norm;
}

double laguerre_orthonormal(int p, int alpha, double x) {
  if (p < 0) throw std::invalid_argument("laguerre: p must be >= 0");
  if (alpha < 0) throw std::invalid_argument("laguerre: alpha must be >= 0");
  if (x < 0.0) throw std::invalid_argument("laguerre: x must be >= 0");
  if (x == 0.0) {
    if (alpha > 0) return 0.0;
    return 1.0;  // ell_p^(0)(0) = 1 for every p
  }

  // ell_0 = x^(alpha/2) e^(-x/2) / sqrt(Gamma(alpha+1)); keep the magnitude in
  // a separate power-of-two exponent, since for large alpha this can sit
  // thousands of orders below the representable range while ell_p near the
  // turning point is O(1).
  const double log2e = 1.4426950408889634;
  double log2_l0 = (0.5 * alpha * std::log(x) - 0.5 * x - 0.5 * std::lgamma(alpha + 1.0)) * log2e;
  long exponent = static_cast<long>(std::floor(log2_l0));
  double prev = 0.0;
  double cur = std::exp2(log2_l0 - static_cast<double>(exponent));
  for (int k = 0; k < p; ++k) {
    // ell_{k+1} = ((2k+alpha+1-x) ell_k - sqrt(k(k+alpha)) ell_{k-1})
    //             / sqrt((k+1)(k+1+alpha))
    const double a = 2.0 * k + alpha + 1.0 - x;
    const double b = std::sqrt(static_cast<double>(k) * (k + alpha));
    const double c = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
    const double next = (a * cur - b * prev) / c;
    prev = cur;
    cur = next;
    const double mag = std::max(std::abs(cur), std::abs(prev));
    if (mag > 0x1p500) {
      prev *= 0x1p-500;
      cur *= 0x1p-500;
      exponent += 500;
    } else if (mag > 0.0 && mag < 0x1p-500) {
      prev *= 0x1p500;
      cur *= 0x1p500;
      exponent -= 500;
    }
  }
  if (cur == 0.0) return 0.0;
  if (exponent < -1060) return 0.0;
  if (exponent > 1020) throw std::overflow_error("laguerre: result overflows");
  return std::ldexp(cur, static_cast<int>(exponent));
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / pp;
      t -= dt;
      if (std::abs(dt) < 1e-15) {
        // one polishing step
        p0 = 1.0;
        p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        pp = n * (t * p1 - p0) / (t * t - 1.0);
        break;
      }
    }
    rule.nodes[static_cast<size_t>(i)] = -t;
    rule.nodes[static_cast<size_t>(n - 1 - i)] = t;
    const double w = 2.0 / ((1.0 - t * t) * pp * pp);
    rule.weights[static_cast<size_t>(i)] = w;
    rule.weights[static_cast<size_t>(n - 1 - i)] = w;
  }
  if (n % 2) rule.nodes[static_cast<size_t>(n / 2)] = 0.0;
  return rule;
}

namespace {

// Gauss-Kronrod 7-15 nodes/weights (positive half; symmetric).
constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kGK15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kG7Weights[4] = {  // at nodes 1, 3, 5, 7 (odd indices)
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Segment {
  double a, b, value, error;
};

Segment gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double k15 = kGK15Weights[7] * f(mid);
  double g7 = kG7Weights[3] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGK15Nodes[i];
    const double fs = f(mid - dx) + f(mid + dx);
    k15 += kGK15Weights[i] * fs;
    if (i % 2 == 1) g7 += kG7Weights[i / 2] * fs;
  }
  k15 *= half;
  g7 *= half;
  const double diff = std::abs(k15 - g7);
  return {a, b, k15, diff * std::sqrt(std::min(1.0, 200.0 * diff))};
}

}  // namespace

QuadResult adaptive_gauss_kronrod(const std::function<double(double)>& f,
                                  double a, double b, double abs_tol,
                                  double rel_tol, int max_segments) {
  std::vector<Segment> segs;
  segs.push_back(gk15(f, a, b));
  while (static_cast<int>(segs.size()) < max_segments) {
    double total = 0.0, err = 0.0;
    size_t worst = 0;
    for (size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].value;
      err += segs[i].error;
      if (segs[i].error > segs[worst].error) worst = i;
    }
    if (err <= std::max(abs_tol, rel_tol * std::abs(total)))
      return {total, err, true};
    const Segment s = segs[worst];
    const double mid = 0.5 * (s.a + s.b);
    segs[worst] = gk15(f, s.a, mid);
    segs.push_back(gk15(f, mid, s.b));
  }
  double total = 0.0, err = 0.0;
  for (const auto& s : segs) {
    total += s.value;
    err += s.error;
  }
  return {total, err, err <= std::max(abs_tol, rel_tol * std::abs(total))};
}

}  // namespace evb
