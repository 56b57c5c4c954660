#pragma once

#include <vector>

#include "dps/rational.hpp"

namespace dps {

/// Exact monomial coefficients (constant term first) of the Gegenbauer
/// polynomial of the given degree with parameter (n-2)/2, computed by the
/// three-term recurrence
///   k C_k = 2(k + lam - 1) t C_{k-1} - (k + 2 lam - 2) C_{k-2}.
/// For n = 3 these are the Legendre polynomials.
inline std::vector<Rat> gegenbauer_coeffs(int n, int degree) {
  if (n < 3) throw validation_error("n: Gegenbauer parameter needs n >= 3");
  if (degree < 0) throw validation_error("degree: must be >= 0");
  const Rat lam(n - 2, 2);
  std::vector<Rat> prev{Rat(1)};  // C_0
  if (degree == 0) return prev;
  std::vector<Rat> cur{Rat(0), 2 * lam};  // C_1
  for (int k = 2; k <= degree; ++k) {
    std::vector<Rat> next(static_cast<size_t>(k) + 1, Rat(0));
    const Rat a = 2 * (Rat(k) + lam - 1) / Rat(k);
    const Rat b = (Rat(k) + 2 * lam - 2) / Rat(k);
    for (size_t i = 0; i < cur.size(); ++i) next[i + 1] += a * cur[i];
    for (size_t i = 0; i < prev.size(); ++i) next[i] -= b * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Coefficients c_0 .. c_{2m} of the degree-2m polynomial (odd entries zero).
inline std::vector<Rat> gegenbauer_even_coeffs(int n, int m) {
  if (m < 0) throw validation_error("m: must be >= 0");
  return gegenbauer_coeffs(n, 2 * m);
}

/// Value at t = 1, i.e. the sum of the coefficients. Always positive.
inline Rat gegenbauer_at_one(int n, int degree) {
  Rat sum(0);
  for (const Rat& ci : gegenbauer_coeffs(n, degree)) sum += ci;
  return sum;
}

/// Numerically stable evaluation by the same recurrence in double precision.
/// (The exact monomial coefficients alternate and grow fast; summing them in
/// floating point would cancel catastrophically at high degree.)
inline double gegenbauer_eval(int n, int degree, double t) {
  const double lam = (n - 2) / 2.0;
  double prev = 1.0;
  if (degree == 0) return prev;
  double cur = 2.0 * lam * t;
  for (int k = 2; k <= degree; ++k) {
    double next = (2.0 * (k + lam - 1) * t * cur - (k + 2 * lam - 2) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace dps
