#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "dps/errors.hpp"

namespace dps {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational. cpp_rational keeps values reduced with positive
/// denominator, which is exactly the canonical form we need for the
/// integrality tests scattered through the decision procedures.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& q) { return numerator(q); }
inline BigInt rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Largest integer <= q.
inline BigInt rat_floor(const Rat& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt t = n / d;  // truncates toward zero
  if (n < 0 && t * d != n) --t;
  return t;
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rat& q) {
  std::string s = rat_num(q).str();
  if (!is_integer(q)) s += "/" + rat_den(q).str();
  return s;
}

/// Parses "n" or "n/d" with optional leading '-'. Throws validation_error on
/// anything else (including d == 0).
inline Rat parse_rational(std::string_view text) {
  auto fail = [&] { throw validation_error("malformed rational: '" + std::string(text) + "'"); };
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_int(num)) fail();
  BigInt n{std::string(num)};
  if (slash == std::string_view::npos) return Rat(n);
  std::string_view den = text.substr(slash + 1);
  if (!is_int(den)) fail();
  BigInt d{std::string(den)};
  if (d == 0) fail();
  return Rat(n, d);
}

/// Complex number with exact rational components.
struct CRat {
  Rat re{0};
  Rat im{0};

  bool operator==(const CRat& o) const = default;

  bool is_real() const { return im == 0; }

  CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
  CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
  CRat operator-() const { return {-re, -im}; }
};

/// Lexicographic (re, im) order; used for canonical multiset layout.
inline bool crat_less(const CRat& a, const CRat& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

inline std::string to_string(const CRat& z) {
  if (z.im == 0) return to_string(z.re);
  std::string s = to_string(z.re);
  s += (z.im > 0 ? "+" : "-") + to_string(Rat(abs(numerator(z.im)), denominator(z.im))) + "i";
  return s;
}

}  // namespace dps
