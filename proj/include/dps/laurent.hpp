#pragma once

#include <vector>

#include "dps/rational.hpp"

namespace dps {

/// Truncated Laurent series with exact rational coefficients:
///   sum_i c[i] * h^{lead + i},  i = 0 .. c.size()-1.
/// All operations preserve "the stored window of coefficients is exact";
/// anything beyond the window is unknown, not zero.
struct LaurentSeries {
  long long lead = 0;
  std::vector<Rat> c;

  static LaurentSeries constant(Rat value, size_t window) {
    LaurentSeries s;
    s.c.assign(window, Rat(0));
    if (!s.c.empty()) s.c[0] = std::move(value);
    return s;
  }

  /// Multiply by the linear factor (x + h). x = 0 just shifts the exponent.
  void mul_linear(const Rat& x) {
    if (x == 0) {
      ++lead;
      return;
    }
    Rat carry(0);
    for (auto& ci : c) {
      Rat next = ci;         // coefficient entering the carry chain
      ci = x * ci + carry;
      carry = std::move(next);
    }
  }

  /// Divide by the linear factor (x + h). x = 0 shifts the exponent down.
  void div_linear(const Rat& x) {
    if (x == 0) {
      --lead;
      return;
    }
    Rat prev(0);
    for (auto& ci : c) {
      ci = (ci - prev) / x;
      prev = ci;
    }
  }

  void scale(const Rat& factor) {
    for (auto& ci : c) ci *= factor;
  }

  /// Accumulate `other` into this series. Both windows must already start at
  /// a common exponent range; coefficients past either window are dropped,
  /// so callers align windows up front.
  void add_aligned(const LaurentSeries& other) {
    if (c.empty()) {
      *this = other;
      return;
    }
    if (other.c.empty()) return;
    long long lo = std::min(lead, other.lead);
    long long hi_self = lead + static_cast<long long>(c.size());
    long long hi_other = other.lead + static_cast<long long>(other.c.size());
    long long hi = std::min(hi_self, hi_other);
    // Exact window of the sum: starts at the smaller lead, ends where the
    // shorter exact window ends.
    std::vector<Rat> merged(static_cast<size_t>(std::max<long long>(0, hi - lo)), Rat(0));
    for (size_t i = 0; i < merged.size(); ++i) {
      long long e = lo + static_cast<long long>(i);
      if (e >= lead && e < hi_self) merged[i] += c[static_cast<size_t>(e - lead)];
      if (e >= other.lead && e < hi_other)
        merged[i] += other.c[static_cast<size_t>(e - other.lead)];
    }
    lead = lo;
    c = std::move(merged);
  }

  /// Index of the first nonzero stored coefficient, or -1 if the whole
  /// window is exactly zero.
  long long first_nonzero() const {
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) return static_cast<long long>(i);
    return -1;
  }
};

}  // namespace dps
