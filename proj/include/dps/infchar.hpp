#pragma once

#include <algorithm>
#include <vector>

#include "dps/character.hpp"

namespace dps {

/// Multiset of complex rationals, kept sorted (lexicographically by real then
/// imaginary part) so equality is plain vector equality.
struct CNumberMultiset {
  std::vector<CRat> entries;

  static CNumberMultiset of(std::vector<CRat> xs) {
    std::sort(xs.begin(), xs.end(), crat_less);
    return CNumberMultiset{std::move(xs)};
  }

  CNumberMultiset disjoint_union(const CNumberMultiset& other) const {
    std::vector<CRat> merged;
    merged.reserve(entries.size() + other.entries.size());
    std::merge(entries.begin(), entries.end(), other.entries.begin(), other.entries.end(),
               std::back_inserter(merged), crat_less);
    return CNumberMultiset{std::move(merged)};
  }

  bool operator==(const CNumberMultiset& o) const = default;
};

/// Arithmetic multiset {s + (p-1)/2, s + (p-3)/2, ..., s - (p-1)/2}:
/// length p, center s, consecutive gaps exactly 1.
struct SegmentDesc {
  CRat center;
  int length = 1;
};

inline CNumberMultiset expand_segment(const SegmentDesc& seg) {
  if (seg.length < 1) throw validation_error("segment: length must be >= 1");
  std::vector<CRat> xs;
  xs.reserve(seg.length);
  for (int i = 0; i < seg.length; ++i)
    xs.push_back(CRat{seg.center.re + Rat(seg.length - 1 - 2 * i, 2), seg.center.im});
  return CNumberMultiset::of(std::move(xs));
}

namespace detail {

// Shared imaginary part plus descending real parts, or nothing.
inline bool descending_reals(const CNumberMultiset& ms, std::vector<Rat>& out) {
  if (ms.entries.empty()) throw precondition_error("segment test: empty multiset");
  const Rat& im = ms.entries.front().im;
  out.clear();
  out.reserve(ms.entries.size());
  for (const CRat& z : ms.entries) {
    if (z.im != im) return false;
    out.push_back(z.re);
  }
  std::sort(out.rbegin(), out.rend());
  return true;
}

}  // namespace detail

/// True iff the entries share one imaginary part and, sorted descending,
/// drop by exactly 1 at each step. Repeats break the chain.
inline bool is_segment(const CNumberMultiset& ms) {
  std::vector<Rat> reals;
  if (!detail::descending_reals(ms, reals)) return false;
  for (size_t i = 0; i + 1 < reals.size(); ++i)
    if (reals[i] - reals[i + 1] != 1) return false;
  return true;
}

/// Like is_segment but any non-negative integer gap (including 0) is allowed.
inline bool is_generalized_segment(const CNumberMultiset& ms) {
  std::vector<Rat> reals;
  if (!detail::descending_reals(ms, reals)) return false;
  for (size_t i = 0; i + 1 < reals.size(); ++i)
    if (!is_integer(reals[i] - reals[i + 1])) return false;
  return true;
}

/// Infinitesimal character of chi x 1 as an exact multiset: one component
/// over R, a pair over C. The nu-exponent of chi rides on the segment of
/// chi's own block (size p1); the other block carries the centered trivial
/// segment. Over C the two components use centers s + k and s - k, where k
/// is the alpha-exponent.
struct InfChar {
  std::vector<CNumberMultiset> components;  // size 1 (R) or 2 (C)

  bool operator==(const InfChar& o) const = default;
};

inline InfChar infchar_of(FieldKind field, int n, int p1, const Character& chi) {
  if (!is_archimedean(field))
    throw precondition_error("infchar: defined for archimedean fields only");
  if (chi.field != field) throw validation_error("chi: field tag mismatch");
  if (p1 < 1 || p1 > n - 1)
    throw precondition_error("p1: need 1 <= p1 <= n-1");
  if (chi.p != p1) throw validation_error("chi: defined on GL_" + std::to_string(chi.p));
  const int p2 = n - p1;
  const CNumberMultiset zero_block = expand_segment({CRat{}, p2});

  InfChar result;
  if (field == FieldKind::Real) {
    result.components.push_back(
        expand_segment({chi.nu_exp, p1}).disjoint_union(zero_block));
  } else {
    const Rat k{chi.alpha_exp};
    result.components.push_back(
        expand_segment({CRat{chi.nu_exp.re + k, chi.nu_exp.im}, p1}).disjoint_union(zero_block));
    result.components.push_back(
        expand_segment({CRat{chi.nu_exp.re - k, chi.nu_exp.im}, p1}).disjoint_union(zero_block));
  }
  return result;
}

}  // namespace dps
