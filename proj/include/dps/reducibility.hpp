#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dps/character.hpp"

namespace dps {

/// Tags for the four closed-form reducibility conditions. I applies over any
/// field, II and III over R, IV over C.
enum class ConditionTag { I, II, III, IV };

inline std::string to_string(ConditionTag t) {
  switch (t) {
    case ConditionTag::I: return "I";
    case ConditionTag::II: return "II";
    case ConditionTag::III: return "III";
    case ConditionTag::IV: return "IV";
  }
  return "?";
}

struct ConditionMatch {
  ConditionTag tag;
  long long k = 0;
  std::optional<long long> l;  // second exponent, complex finite-dim case only

  bool operator==(const ConditionMatch& o) const = default;
};

enum class Method { ClosedForm, Recursive };

struct ReducibilityVerdict {
  bool reducible = false;
  std::vector<ConditionMatch> matched;  // every matched condition, ClosedForm only
  Method method = Method::ClosedForm;
  std::string note;  // set when a convention (e.g. ramified input) shaped the answer
};

struct FiniteDimWitness {
  enum class Side { Submodule, Quotient };
  Side side = Side::Submodule;
  long long k = 0;
  std::optional<long long> l;                  // complex case
  std::optional<Character> character_of_psi;   // non-archimedean one-dimensional case
};

namespace detail {

inline void require_block_range(int n, int p1, const Character& chi) {
  if (n < 2) throw precondition_error("n: need n >= 2");
  if (p1 < 1 || p1 > n - 1)
    throw precondition_error("p1: need 1 <= p1 <= n-1, got p1=" + std::to_string(p1) +
                             " with n=" + std::to_string(n));
  if (chi.p != p1)
    throw validation_error("chi: defined on GL_" + std::to_string(chi.p) + ", expected GL_" +
                           std::to_string(p1));
}

/// x as an integer if it is one.
inline std::optional<long long> as_integer(const Rat& x) {
  if (!is_integer(x)) return std::nullopt;
  return rat_num(x).convert_to<long long>();
}

}  // namespace detail

/// Closed-form reducibility test for chi x 1 on GL_n, chi on GL_{p1}.
/// All comparisons are exact; a character matches a listed form only when the
/// full complex exponent is equal (imaginary part zero included).
inline ReducibilityVerdict is_reducible_closed(FieldKind field, int n, int p1,
                                               const Character& chi) {
  detail::require_block_range(n, p1, chi);
  if (chi.field != field) throw validation_error("chi: field tag mismatch");
  const int r = std::min(p1, n - p1);
  const Rat half_n = Rat(n, 2);

  ReducibilityVerdict v;
  v.method = Method::ClosedForm;

  if (field == FieldKind::NonArchimedean && chi.ramified) {
    // Every listed condition requires an unramified twist of nu, so a
    // ramified character matches none of them.
    v.note = "ramified character: treated as irreducible (all reducibility "
             "conditions require an unramified twist of nu)";
    return v;
  }

  const Rat s = chi.nu_exp.re;
  const bool real_exponent = chi.nu_exp.im == 0;
  const bool plain_nu = is_real_nu_power(chi);

  auto add = [&v](ConditionTag tag, long long k, std::optional<long long> l = std::nullopt) {
    ConditionMatch m{tag, k, l};
    if (std::find(v.matched.begin(), v.matched.end(), m) == v.matched.end())
      v.matched.push_back(m);
  };

  // Condition I, any field: chi = nu^{+-(k - n/2)}, integer 0 <= k <= r-1.
  if (plain_nu) {
    for (const Rat& cand : {Rat(s + half_n), Rat(half_n - s)}) {
      if (auto k = detail::as_integer(cand); k && *k >= 0 && *k <= r - 1) add(ConditionTag::I, *k);
    }
  }

  if (field == FieldKind::Real && real_exponent && chi.alpha_exp == 0) {
    // Condition II: chi = eps^{k+1} nu^{+-(k - r + n/2)}, integer k >= 1.
    for (const Rat& cand : {Rat(s + r - half_n), Rat(-s + r - half_n)}) {
      if (auto k = detail::as_integer(cand); k && *k >= 1 && (*k + 1) % 2 == chi.sign_exp % 2)
        add(ConditionTag::II, *k);
    }
    // Condition III (r > 1): chi = nu^{+-(k - r + n/2 + 1)} or
    // eps nu^{+-(k - r + n/2 + 1)}, integer k >= 1; both sign parts qualify.
    if (r > 1) {
      for (const Rat& cand : {Rat(s + r - half_n - 1), Rat(-s + r - half_n - 1)}) {
        if (auto k = detail::as_integer(cand); k && *k >= 1) add(ConditionTag::III, *k);
      }
    }
  }

  // Condition IV, complex field: chi or chi^{-1} equals alpha^k nu^s with
  // s - n/2 and k integers and s + k, s - k > n/2 - r. Equivalently
  // |s| - |k| > n/2 - r with s real.
  if (field == FieldKind::Complex && real_exponent) {
    const long long k = chi.alpha_exp;
    const Rat bound = half_n - Rat(r);
    if (is_integer(s - half_n)) {
      const Rat abs_s = s >= 0 ? s : -s;
      const long long abs_k = k >= 0 ? k : -k;
      if (abs_s - Rat(abs_k) > bound) add(ConditionTag::IV, k);
    }
  }

  v.reducible = !v.matched.empty();
  return v;
}

/// chi x 1 has a finite-dimensional submodule iff one of:
///   any field:  chi = nu^{-n/2}
///   R:          chi = eps^k nu^{-k-n/2},               integer k >= 0
///   C:          chi = alpha^{(l-k)/2} nu^{-(k+l+n)/2}, integers k, l >= 0 of equal parity
/// Returns the witnessing exponents; for a non-archimedean match the
/// one-dimensional submodule character is attached as well.
inline std::optional<FiniteDimWitness> finite_dim_submodule(FieldKind field, int n, int p1,
                                                            const Character& chi) {
  detail::require_block_range(n, p1, chi);
  if (chi.field != field) throw validation_error("chi: field tag mismatch");
  const Rat half_n = Rat(n, 2);
  if (chi.nu_exp.im != 0) return std::nullopt;
  const Rat s = chi.nu_exp.re;

  switch (field) {
    case FieldKind::NonArchimedean: {
      if (chi.ramified || s != -half_n) return std::nullopt;
      FiniteDimWitness w;
      w.side = FiniteDimWitness::Side::Submodule;
      w.k = 0;
      w.character_of_psi = nu_power(field, n, Rat(-(n - p1), 2));
      return w;
    }
    case FieldKind::Real: {
      auto k = detail::as_integer(-s - half_n);
      if (!k || *k < 0 || (*k % 2) != (chi.sign_exp % 2)) return std::nullopt;
      FiniteDimWitness w;
      w.side = FiniteDimWitness::Side::Submodule;
      w.k = *k;
      return w;
    }
    case FieldKind::Complex: {
      const long long a = chi.alpha_exp;
      auto k = detail::as_integer(-s - half_n - Rat(a));
      auto l = detail::as_integer(-s - half_n + Rat(a));
      if (!k || !l || *k < 0 || *l < 0) return std::nullopt;
      FiniteDimWitness w;
      w.side = FiniteDimWitness::Side::Submodule;
      w.k = *k;
      w.l = *l;
      return w;
    }
  }
  return std::nullopt;
}

/// Finite-dimensional quotients of chi x 1 correspond to finite-dimensional
/// submodules of chi^{-1} x 1 (the two representations are contragredient).
inline std::optional<FiniteDimWitness> finite_dim_quotient(FieldKind field, int n, int p1,
                                                           const Character& chi) {
  auto w = finite_dim_submodule(field, n, p1, invert(chi));
  if (!w) return std::nullopt;
  w->side = FiniteDimWitness::Side::Quotient;
  if (w->character_of_psi) w->character_of_psi = nu_power(field, n, Rat(p1, 2));
  return w;
}

namespace detail {

using RecKey = std::tuple<int, int, int, int, int, bool, Rat, Rat>;

inline RecKey make_key(FieldKind field, int n, int p1, const Character& chi) {
  return {static_cast<int>(field), n,          p1,          chi.sign_exp % 2,
          chi.alpha_exp,           chi.ramified, chi.nu_exp.re, chi.nu_exp.im};
}

// Shared memo table; entries are idempotent so last-write-wins is fine.
// depth = derivative depth of the finite-dimensional witness, -1 if none.
inline std::pair<bool, int> reducible_recursive_impl(FieldKind field, int n, int p1,
                                                     const Character& chi) {
  static std::map<RecKey, std::pair<bool, int>> memo;
  static std::mutex memo_mutex;

  const RecKey key = make_key(field, n, p1, chi);
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  std::pair<bool, int> result{false, -1};
  if (finite_dim_submodule(field, n, p1, chi) || finite_dim_quotient(field, n, p1, chi)) {
    result = {true, 0};
  } else if (std::min(p1 - 1, n - p1 - 1) >= 1) {
    auto sub = reducible_recursive_impl(field, n - 2, p1 - 1, restrict_character(chi));
    if (sub.first) result = {true, sub.second + 1};
  }

  {
    std::lock_guard lock(memo_mutex);
    memo.emplace(key, result);
  }
  return result;
}

}  // namespace detail

/// Inductive reducibility test: chi x 1 is reducible iff it has a
/// finite-dimensional submodule or quotient, or the one-step derivative
/// chi' x 1 on GL_{n-2} is. Worst-case depth is min(p1, n-p1) - 1.
inline ReducibilityVerdict is_reducible_recursive(FieldKind field, int n, int p1,
                                                  const Character& chi) {
  detail::require_block_range(n, p1, chi);
  if (chi.field != field) throw validation_error("chi: field tag mismatch");
  ReducibilityVerdict v;
  v.method = Method::Recursive;
  auto [red, depth] = detail::reducible_recursive_impl(field, n, p1, chi);
  v.reducible = red;
  if (red)
    v.note = "finite-dimensional constituent witnessed at derivative depth " +
             std::to_string(depth);
  return v;
}

/// Upper bound on the composition length of chi x 1: non-archimedean length
/// is 1 or 2; over R or C the constituents have pairwise distinct ranks in
/// {0, ..., r}, so at most r + 1 of them.
inline int length_upper_bound(FieldKind field, int n, int p1, const Character& chi) {
  const bool red = is_reducible_closed(field, n, p1, chi).reducible;
  if (!red) return 1;
  if (field == FieldKind::NonArchimedean) return 2;
  return std::min(p1, n - p1) + 1;
}

}  // namespace dps
