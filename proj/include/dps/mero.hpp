#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "dps/gegenbauer.hpp"
#include "dps/laurent.hpp"
#include "dps/rational.hpp"

namespace dps {

/// Laurent germ of a meromorphic function at a rational point alpha0.
///
///   pole_order > 0   pole of that order, `leading` is the leading coefficient
///   pole_order = 0   finite nonzero value in `leading`
///   exact_zero       the function value at alpha0 is exactly zero (decided in
///                    rational arithmetic, never by threshold); `leading` is 0
///                    and pole_order holds minus the vanishing order, which
///                    consumers may ignore.
struct MeroValue {
  int pole_order = 0;
  std::complex<double> leading{0.0, 0.0};
  bool exact_zero = false;
};

namespace detail {

/// Representative of x mod 1 in the half-open class interval (0, 1].
inline Rat unit_rep(const Rat& x) {
  Rat frac = x - Rat(rat_floor(x));
  return frac == 0 ? Rat(1) : frac;
}

/// Folds the germ of Gamma(x0 + h) / Gamma(unit_rep(x0) + h) into `s` as a
/// finite product of linear factors (functional equation applied |d| times).
/// `in_numerator` = false folds the reciprocal instead. Factors that vanish
/// at h = 0 shift the leading exponent; this is the only pole/zero source.
inline void apply_gamma_shift(LaurentSeries& s, const Rat& x0, bool in_numerator) {
  const Rat rep = unit_rep(x0);
  const long long d = rat_num(x0 - rep).convert_to<long long>();
  if (d >= 1) {
    for (long long t = 0; t < d; ++t) {
      const Rat x = rep + Rat(t);
      in_numerator ? s.mul_linear(x) : s.div_linear(x);
    }
  } else {
    for (long long t = 0; t < -d; ++t) {
      const Rat x = x0 + Rat(t);
      in_numerator ? s.div_linear(x) : s.mul_linear(x);
    }
  }
}

/// Gamma(x) = factor * Gamma(unit_rep(x)) for x > 0, with an exact rational
/// factor.
inline Rat gamma_shift_factor(const Rat& x) {
  if (x <= 0) throw std::logic_error("gamma_shift_factor: needs x > 0");
  const Rat rep = unit_rep(x);
  const long long d = rat_num(x - rep).convert_to<long long>();
  Rat f(1);
  for (long long t = 0; t < d; ++t) f *= rep + Rat(t);
  return f;
}

/// Evaluates prod Gamma(num_i) / prod Gamma(den_i) after cancelling exactly
/// equal arguments, so expressions that collapse to rationals stay exact.
inline double gamma_ratio(std::vector<Rat> num, std::vector<Rat> den) {
  for (auto it = num.begin(); it != num.end();) {
    auto match = std::find(den.begin(), den.end(), *it);
    if (match != den.end()) {
      den.erase(match);
      it = num.erase(it);
    } else {
      ++it;
    }
  }
  double value = 1.0;
  for (const Rat& x : num) value *= std::tgamma(to_double(x));
  for (const Rat& x : den) value /= std::tgamma(to_double(x));
  return value;
}

/// Finishes a germ: S(h) * gamma-ratio with h = (alpha - alpha0)/2.
/// `rational_factor` multiplies the whole germ.
inline MeroValue finish_germ(const LaurentSeries& sum, const Rat& rational_factor,
                             std::vector<Rat> gamma_num, std::vector<Rat> gamma_den) {
  const long long idx = sum.first_nonzero();
  if (idx < 0) throw std::logic_error("finish_germ: window exhausted");
  const long long exponent = sum.lead + idx;  // same exponent in h and in alpha

  MeroValue out;
  out.pole_order = static_cast<int>(-exponent);
  if (exponent > 0) {
    out.exact_zero = true;
    return out;
  }
  const Rat coeff = sum.c[static_cast<size_t>(idx)] * rational_factor;
  // h^e = ((alpha - alpha0)/2)^e contributes 2^{-e} to the alpha-coefficient.
  double scale = std::pow(2.0, static_cast<double>(-exponent));
  out.leading = to_double(coeff) * gamma_ratio(std::move(gamma_num), std::move(gamma_den)) * scale;
  return out;
}

}  // namespace detail

/// Laurent germ at alpha = alpha0 of
///   B((alpha + 2j + 1)/2, (n-1)/2)
///     = Gamma((alpha+2j+1)/2) Gamma((n-1)/2) / Gamma((alpha+2j+n)/2),
/// the meromorphic continuation of the weighted moment
/// int_{-1}^{1} |t|^alpha t^{2j} (1-t^2)^{(n-3)/2} dt.
inline MeroValue half_beta_mero(const Rat& alpha0, long long j, int n) {
  if (n < 3) throw validation_error("n: need n >= 3");
  if (j < 0) throw validation_error("j: need j >= 0");
  const Rat a = (alpha0 + Rat(2 * j + 1)) / 2;
  const Rat b = a + Rat(n - 1, 2);
  const Rat w = Rat(n - 1, 2);

  LaurentSeries s = LaurentSeries::constant(Rat(1), 8);
  detail::apply_gamma_shift(s, a, true);
  detail::apply_gamma_shift(s, b, false);

  return detail::finish_germ(s, detail::gamma_shift_factor(w),
                             {detail::unit_rep(a), detail::unit_rep(w)},
                             {detail::unit_rep(b)});
}

/// Laurent germ at alpha0 of the eigenvalue of the alpha-cosine transform on
/// even spherical harmonics of degree 2m on S^{n-1} (the i = 1 Grassmannian):
///
///   lambda_{alpha,2m}(n) = [ sum_j c_{2j} B((alpha+2j+1)/2, (n-1)/2) ]
///                          / [ C_{2m}(1) B(1/2, (n-1)/2) ],
///
/// with c the exact Gegenbauer coefficients. Pole orders and zero leading
/// sums are decided in exact rational arithmetic; only the final value picks
/// up floating point through the residual Gamma factors (none remain when
/// classes cancel, which keeps e.g. half-integral spectra exactly rational).
inline MeroValue eigenvalue_mero(int n, const Rat& alpha0, int m) {
  if (n < 3) throw validation_error("n: need n >= 3");
  const std::vector<Rat> coeffs = gegenbauer_even_coeffs(n, m);
  const Rat a0 = (alpha0 + 1) / 2;
  const Rat b0 = a0 + Rat(n - 1, 2);

  LaurentSeries sum;
  for (size_t window = 8; window <= 1024; window *= 2) {
    sum = LaurentSeries{};
    for (int j = 0; j <= m; ++j) {
      const Rat& cj = coeffs[static_cast<size_t>(2 * j)];
      if (cj == 0) continue;
      LaurentSeries term = LaurentSeries::constant(cj, window);
      detail::apply_gamma_shift(term, a0 + Rat(j), true);
      detail::apply_gamma_shift(term, b0 + Rat(j), false);
      sum.add_aligned(term);
    }
    if (sum.first_nonzero() >= 0) break;
    if (window == 1024)
      throw std::logic_error("eigenvalue_mero: germ cancelled beyond window 1024");
  }

  // Divide by C_{2m}(1) B(1/2, (n-1)/2); the Gamma((n-1)/2) factors cancel,
  // leaving Gamma(n/2) / Gamma(1/2) and an exact rational.
  const Rat half_n = Rat(n, 2);
  const Rat norm_rational = detail::gamma_shift_factor(half_n) / gegenbauer_at_one(n, 2 * m);

  return detail::finish_germ(sum, norm_rational,
                             {detail::unit_rep(a0), detail::unit_rep(half_n)},
                             {detail::unit_rep(b0), Rat(1, 2)});
}

}  // namespace dps
