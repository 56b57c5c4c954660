#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "dps/errors.hpp"
#include "dps/gegenbauer.hpp"

namespace dps {
namespace quad {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

/// Gauss-Legendre nodes/weights by Newton iteration on the Legendre
/// recurrence; standard construction, double precision.
inline GaussRule gauss_legendre(int k) {
  GaussRule rule;
  rule.nodes.resize(static_cast<size_t>(k));
  rule.weights.resize(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (k + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int d = 2; d <= k; ++d) {
        double p2 = ((2 * d - 1) * x * p1 - (d - 1) * p0) / d;
        p0 = p1;
        p1 = p2;
      }
      dp = k * (x * p1 - p0) / (x * x - 1.0);
      double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[static_cast<size_t>(i)] = x;
    rule.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

inline double apply(const GaussRule& rule, const std::function<double(double)>& f, double a,
                    double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

/// Adaptive bisection with a GL7/GL15 error estimate. Converges on the mild
/// endpoint singularities that show up here (half-integer powers of 1 - t^2).
inline double adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                       int depth = 0) {
  static const GaussRule g7 = gauss_legendre(7);
  static const GaussRule g15 = gauss_legendre(15);
  const double coarse = apply(g7, f, a, b);
  const double fine = apply(g15, f, a, b);
  if (std::abs(fine - coarse) <= tol || depth >= 52) return fine;
  const double mid = 0.5 * (a + b);
  return adaptive(f, a, mid, 0.5 * tol, depth + 1) + adaptive(f, mid, b, 0.5 * tol, depth + 1);
}

}  // namespace quad

/// Independent numerical oracle for the cosine-transform eigenvalue on even
/// harmonics of degree 2m: direct quadrature of
///   lambda = int_0^1 t^alpha C_{2m}(t) (1-t^2)^{(n-3)/2} dt
///            / [ C_{2m}(1) int_0^1 (1-t^2)^{(n-3)/2} dt ]
/// on the convergent half-plane alpha > -1. For alpha < 0 the substitution
/// t = u^{2/(1+alpha)} removes the origin singularity exactly
/// (t^alpha dt = beta u du). Absolute accuracy ~1e-10; shares nothing with
/// the meromorphic-continuation path except the polynomial recurrence.
inline double eigenvalue_quadrature(int n, double alpha, int m) {
  if (n < 3) throw validation_error("n: need n >= 3");
  if (m < 0) throw validation_error("m: need m >= 0");
  if (!(alpha > -1.0))
    throw precondition_error("alpha: quadrature needs alpha > -1 (use the meromorphic germ "
                             "beyond the convergence half-plane)");
  const double wexp = (n - 3) / 2.0;
  const int d = 2 * m;
  const double tol = 1e-12;

  double numer;
  if (alpha >= 0.0) {
    numer = quad::adaptive(
        [&](double t) {
          return std::pow(t, alpha) * gegenbauer_eval(n, d, t) * std::pow(1.0 - t * t, wexp);
        },
        0.0, 1.0, tol);
  } else {
    const double beta = 2.0 / (1.0 + alpha);
    numer = quad::adaptive(
        [&](double u) {
          const double t = std::pow(u, beta);
          return beta * u * gegenbauer_eval(n, d, t) * std::pow(1.0 - t * t, wexp);
        },
        0.0, 1.0, tol);
  }

  const double norm = quad::adaptive(
      [&](double t) { return std::pow(1.0 - t * t, wexp); }, 0.0, 1.0, tol);
  return numer / (to_double(gegenbauer_at_one(n, d)) * norm);
}

}  // namespace dps
