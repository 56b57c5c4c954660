#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dps/character.hpp"
#include "dps/mero.hpp"
#include "dps/reducibility.hpp"

namespace dps {

/// Germ table of the i = 1 cosine-transform eigenvalues at a rational point:
/// one row per harmonic half-degree m (degree 2m), 0 <= m <= M.
struct SpectralTable {
  int n = 3;
  Rat alpha0;
  int M = 40;
  std::vector<MeroValue> rows;
};

namespace detail {

inline void require_grassmannian(int n, int i) {
  if (n < 2) throw precondition_error("n: need n >= 2");
  if (i < 1 || i > n - 1) throw precondition_error("i: need 1 <= i <= n-1");
}

}  // namespace detail

/// The exceptional set for S^i_alpha on Gr_i(R^n): alpha is non-invertible
/// iff some non-negative integer k gives
///   (a) alpha = 2k          (b) alpha = -n - 2k
///   (c) alpha = 1 - r + k   (d) alpha = r - n - 1 - k     (both only if r > 1)
/// with r = min(i, n-i). All matches are integers; the range endpoints may be
/// any rationals.
inline std::vector<Rat> exceptional_alphas(int n, int i, const Rat& lo, const Rat& hi) {
  detail::require_grassmannian(n, i);
  if (lo > hi) throw validation_error("range: need lo <= hi");
  const int r = std::min(i, n - i);
  std::set<Rat> found;
  auto scan_up = [&](Rat first, int step) {
    for (Rat a = first; a <= hi; a += step)
      if (a >= lo) found.insert(a);
  };
  auto scan_down = [&](Rat first, int step) {
    for (Rat a = first; a >= lo; a -= step)
      if (a <= hi) found.insert(a);
  };
  scan_up(Rat(0), 2);        // (a)
  scan_down(Rat(-n), 2);     // (b)
  if (r > 1) {
    scan_up(Rat(1 - r), 1);      // (c)
    scan_down(Rat(r - n - 1), 1);  // (d)
  }
  return std::vector<Rat>(found.begin(), found.end());
}

/// Membership test against the same four families.
inline bool s_alpha_invertible(int n, int i, const Rat& alpha0) {
  detail::require_grassmannian(n, i);
  const int r = std::min(i, n - i);
  if (!is_integer(alpha0)) return true;
  const long long a = rat_num(alpha0).convert_to<long long>();
  if (a >= 0 && a % 2 == 0) return false;           // (a)
  if (a <= -n && (a + n) % 2 == 0) return false;    // (b)
  if (r > 1 && a >= 1 - r) return false;            // (c)
  if (r > 1 && a <= r - n - 1) return false;        // (d)
  return true;
}

/// Invertibility decision together with the translation to the symbolic
/// engine: S^i_alpha is the standard intertwining operator of chi x 1 with
/// chi = nu^{alpha + n/2} on GL_i over R (after an overall character twist),
/// and an intertwining operator is invertible iff that representation is
/// irreducible. A disagreement between the two routes is reported as an
/// alarm, never silently patched.
struct SAlphaReport {
  bool invertible = false;
  bool translated_reducible = false;
  bool consistent = true;
};

inline SAlphaReport s_alpha_report(int n, int i, const Rat& alpha0) {
  SAlphaReport rep;
  rep.invertible = s_alpha_invertible(n, i, alpha0);
  const Character chi = nu_power(FieldKind::Real, i, alpha0 + Rat(n, 2));
  rep.translated_reducible = is_reducible_closed(FieldKind::Real, n, i, chi).reducible;
  rep.consistent = rep.invertible == !rep.translated_reducible;
  return rep;
}

/// Spectral reading of invertibility at i = 1: build the germ table for
/// m <= M, take k0 = the most singular leading exponent over the rows, and
/// call the leading operator invertible iff every row reaches exponent k0
/// with a nonzero coefficient (equivalently: no row is exactly zero and no
/// row is strictly less singular than the worst one).
inline std::pair<bool, SpectralTable> spectral_invertibility(int n, const Rat& alpha0, int M) {
  if (n < 3) throw precondition_error("n: need n >= 3");
  if (M < 1) throw precondition_error("M: need M >= 1");
  SpectralTable table;
  table.n = n;
  table.alpha0 = alpha0;
  table.M = M;
  table.rows.reserve(static_cast<size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) table.rows.push_back(eigenvalue_mero(n, alpha0, m));

  bool any = false;
  long long k0 = 0;  // leading exponent = -pole_order
  for (const MeroValue& row : table.rows) {
    if (row.exact_zero) continue;
    const long long e = -static_cast<long long>(row.pole_order);
    if (!any || e < k0) k0 = e;
    any = true;
  }
  bool invertible = any;
  for (const MeroValue& row : table.rows) {
    if (row.exact_zero || -static_cast<long long>(row.pole_order) != k0) {
      invertible = false;
      break;
    }
  }
  return {invertible, std::move(table)};
}

/// Numerical witness that the inverse of S^1_alpha is a scalar multiple of
/// S^{n-1}_{-n-alpha} (identified back to Gr_1 by orthocomplement, which
/// preserves the cosine): the eigenvalue products
///   p_m = lambda_{alpha,2m} * lambda_{-n-alpha,2m}
/// must be independent of m. Returns max_m |p_m / p_0 - 1| and the products.
struct InverseScalarCheck {
  double max_relative_deviation = 0.0;
  std::vector<double> products;
};

inline InverseScalarCheck inverse_scalar_check(int n, const Rat& alpha, int M) {
  if (n < 3) throw precondition_error("n: need n >= 3");
  if (M < 1) throw precondition_error("M: need M >= 1");
  const Rat dual = Rat(-n) - alpha;
  if (!s_alpha_invertible(n, 1, alpha))
    throw precondition_error("alpha: " + to_string(alpha) + " is exceptional for (n=" +
                             std::to_string(n) + ", i=1)");
  if (!s_alpha_invertible(n, 1, dual))
    throw precondition_error("alpha: dual point " + to_string(dual) + " is exceptional for (n=" +
                             std::to_string(n) + ", i=1)");

  InverseScalarCheck out;
  out.products.reserve(static_cast<size_t>(M) + 1);
  for (int m = 0; m <= M; ++m) {
    const MeroValue a = eigenvalue_mero(n, alpha, m);
    const MeroValue b = eigenvalue_mero(n, dual, m);
    if (a.exact_zero || b.exact_zero || a.pole_order != 0 || b.pole_order != 0)
      throw precondition_error("alpha: eigenvalue germ at m=" + std::to_string(m) +
                               " is not finite and nonzero");
    out.products.push_back(a.leading.real() * b.leading.real());
  }
  const double p0 = out.products.front();
  for (double p : out.products)
    out.max_relative_deviation = std::max(out.max_relative_deviation, std::abs(p / p0 - 1.0));
  return out;
}

}  // namespace dps
