#pragma once

#include <set>
#include <vector>

#include "dps/character.hpp"

namespace dps {

/// All rationals in [lo, hi] with denominator at most max_den (reduced form),
/// sorted ascending.
inline std::vector<Rat> rational_grid(const Rat& lo, const Rat& hi, int max_den) {
  if (max_den < 1) throw validation_error("max_den: need >= 1");
  if (lo > hi) throw validation_error("range: need lo <= hi");
  std::set<Rat> out;
  for (int den = 1; den <= max_den; ++den) {
    const BigInt first = rat_floor(lo * den);
    const BigInt last = rat_floor(hi * den) + 1;
    for (BigInt num = first; num <= last; ++num) {
      const Rat q(num, den);
      if (q >= lo && q <= hi) out.insert(q);
    }
  }
  return std::vector<Rat>(out.begin(), out.end());
}

/// The reducibility test grid of characters on GL_p: sign exponents {0, 1}
/// over R, alpha exponents {-3..3} over C, and real nu-exponents with
/// denominator <= max_den in [lo, hi]. Non-archimedean characters are the
/// unramified twists.
inline std::vector<Character> character_grid(FieldKind field, int p, int max_den, const Rat& lo,
                                             const Rat& hi) {
  std::vector<Character> out;
  const std::vector<Rat> exps = rational_grid(lo, hi, max_den);
  for (const Rat& s : exps) {
    const CRat nu{s, Rat(0)};
    switch (field) {
      case FieldKind::Real:
        for (int sign : {0, 1}) out.push_back(make_character(field, p, sign, std::nullopt, nu));
        break;
      case FieldKind::Complex:
        for (int a = -3; a <= 3; ++a)
          out.push_back(make_character(field, p, std::nullopt, a, nu));
        break;
      case FieldKind::NonArchimedean:
        out.push_back(make_character(field, p, std::nullopt, std::nullopt, nu));
        break;
    }
  }
  return out;
}

}  // namespace dps
