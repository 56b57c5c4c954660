#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "dps/errors.hpp"
#include "dps/field.hpp"
#include "dps/rational.hpp"

namespace dps {

/// A character of GL_p(F), stored by its exponents:
///
///   R:  eps^sign_exp * nu^nu_exp          (eps = sign of determinant)
///   C:  alpha^alpha_exp * nu^nu_exp       (alpha = det/|det|)
///   NA: nu^nu_exp, plus a `ramified` flag marking everything that is not an
///       unramified twist of nu (such characters carry no exponent data here).
///
/// p = 0 is the "empty" character, a legal value used only as the terminator
/// of the derivative recursion.
struct Character {
  FieldKind field = FieldKind::Real;
  int p = 1;
  int sign_exp = 0;   // R only, reduced mod 2
  int alpha_exp = 0;  // C only
  CRat nu_exp;
  bool ramified = false;  // NA only

  bool operator==(const Character& o) const = default;
};

/// Validated constructor. Exponent slots must match the field tag; pass
/// std::nullopt for slots the field does not have.
inline Character make_character(FieldKind field, int p, std::optional<int> sign_exp,
                                std::optional<int> alpha_exp, CRat nu_exp,
                                bool ramified = false) {
  if (p < 0) throw validation_error("p: group size must be >= 0");
  if (sign_exp && field != FieldKind::Real)
    throw validation_error("sign_exp: only characters over R carry a sign exponent");
  if (alpha_exp && field != FieldKind::Complex)
    throw validation_error("alpha_exp: only characters over C carry an alpha exponent");
  if (ramified && field != FieldKind::NonArchimedean)
    throw validation_error("ramified: flag applies to non-archimedean characters only");
  Character chi;
  chi.field = field;
  chi.p = p;
  chi.sign_exp = sign_exp ? ((*sign_exp % 2) + 2) % 2 : 0;
  chi.alpha_exp = alpha_exp.value_or(0);
  chi.nu_exp = std::move(nu_exp);
  chi.ramified = ramified;
  return chi;
}

inline Character trivial_character(FieldKind field, int p) {
  Character chi;
  chi.field = field;
  chi.p = p;
  return chi;
}

inline Character nu_power(FieldKind field, int p, Rat s) {
  Character chi;
  chi.field = field;
  chi.p = p;
  chi.nu_exp = CRat{std::move(s), Rat(0)};
  return chi;
}

/// The real number s(chi) with |chi| = nu^{s(chi)}.
inline Rat s_of(const Character& chi) { return chi.nu_exp.re; }

/// True iff chi is exactly nu^s for real rational s (trivial sign/alpha part,
/// unramified, no imaginary exponent).
inline bool is_real_nu_power(const Character& chi) {
  return chi.sign_exp % 2 == 0 && chi.alpha_exp == 0 && !chi.ramified && chi.nu_exp.im == 0;
}

/// Restriction chi' to GL_{p-1}: same exponents one size down. p may reach 0.
inline Character restrict_character(const Character& chi) {
  if (chi.p < 1) throw precondition_error("restrict: the empty character has no restriction");
  Character out = chi;
  out.p -= 1;
  return out;
}

/// chi^{-1}: all exponents negated (the sign exponent is its own inverse).
inline Character invert(const Character& chi) {
  Character out = chi;
  out.alpha_exp = -chi.alpha_exp;
  out.nu_exp = -chi.nu_exp;
  return out;
}

// ---------------------------------------------------------------------------
// String grammar:  [eps^a*][alpha^k*]nu^{num/den[(+|-)num/den i]}
// ---------------------------------------------------------------------------

inline std::string format_exponents(const Character& chi) {
  std::string s;
  if (chi.field == FieldKind::Real && chi.sign_exp % 2 != 0) s += "eps^1*";
  if (chi.field == FieldKind::Complex && chi.alpha_exp != 0)
    s += "alpha^" + std::to_string(chi.alpha_exp) + "*";
  s += "nu^{" + to_string(chi.nu_exp.re);
  if (chi.nu_exp.im != 0) {
    s += (chi.nu_exp.im > 0 ? "+" : "-");
    s += to_string(Rat(abs(numerator(chi.nu_exp.im)), denominator(chi.nu_exp.im))) + "i";
  }
  s += "}";
  return s;
}

/// Parses the exponent grammar. Field and p come from context; the sign/alpha
/// prefixes must be consistent with the field.
inline Character parse_character(std::string_view text, FieldKind field, int p,
                                 bool ramified = false) {
  std::string_view rest = text;
  std::optional<int> sign, alpha;
  auto take_prefix = [&](std::string_view name) -> std::optional<int> {
    if (rest.substr(0, name.size()) != name) return std::nullopt;
    auto star = rest.find('*');
    if (star == std::string_view::npos)
      throw validation_error("character: '" + std::string(name) + "' prefix must end with '*'");
    std::string_view expo = rest.substr(name.size(), star - name.size());
    Rat e = parse_rational(expo);
    if (!is_integer(e))
      throw validation_error("character: exponent of '" + std::string(name.substr(0, name.size() - 1)) +
                             "' must be an integer");
    rest.remove_prefix(star + 1);
    return static_cast<int>(rat_num(e).convert_to<long long>());
  };
  if (auto e = take_prefix("eps^")) sign = e;
  if (auto e = take_prefix("alpha^")) alpha = e;
  if (rest.substr(0, 4) != "nu^{" || rest.back() != '}')
    throw validation_error("character: expected nu^{...}, got '" + std::string(text) + "'");
  std::string_view body = rest.substr(4, rest.size() - 5);
  CRat nu;
  // Split an optional trailing imaginary part "...(+|-)num/den i".
  if (!body.empty() && body.back() == 'i') {
    std::string_view wo = body.substr(0, body.size() - 1);
    size_t cut = std::string_view::npos;
    for (size_t k = wo.size(); k-- > 1;) {  // skip index 0: leading sign of re
      if ((wo[k] == '+' || wo[k] == '-') && wo[k - 1] != '/') {
        cut = k;
        break;
      }
    }
    if (cut == std::string_view::npos)
      throw validation_error("character: malformed imaginary part in '" + std::string(text) + "'");
    nu.re = parse_rational(wo.substr(0, cut));
    Rat mag = parse_rational(wo.substr(cut + 1));
    nu.im = (wo[cut] == '-') ? -mag : mag;
  } else {
    nu.re = parse_rational(body);
  }
  return make_character(field, p, sign, alpha, nu, ramified);
}

// ---------------------------------------------------------------------------
// Induced representation descriptors
// ---------------------------------------------------------------------------

/// Names chi1 x chi2 = I(P_{p1,p2}, chi1 (x) chi2) without realizing any
/// function space. r = min(p1, p2) is always derived, never stored.
struct InducedRepDesc {
  FieldKind field = FieldKind::Real;
  int n = 2;
  int p1 = 1;
  int p2 = 1;
  Character chi1;
  Character chi2;

  bool operator==(const InducedRepDesc& o) const = default;
};

inline InducedRepDesc make_induced(FieldKind field, int n, int p1, int p2, Character chi1,
                                   Character chi2) {
  if (p1 < 1 || p2 < 1) throw validation_error("p1/p2: block sizes must be positive");
  if (p1 + p2 != n) throw validation_error("n: block sizes must satisfy p1 + p2 = n");
  if (chi1.p != p1) throw validation_error("chi1: defined on GL_" + std::to_string(chi1.p) +
                                           ", expected GL_" + std::to_string(p1));
  if (chi2.p != p2) throw validation_error("chi2: defined on GL_" + std::to_string(chi2.p) +
                                           ", expected GL_" + std::to_string(p2));
  if (chi1.field != field || chi2.field != field)
    throw validation_error("field: descriptor and characters must share one base field");
  return InducedRepDesc{field, n, p1, p2, std::move(chi1), std::move(chi2)};
}

inline int rank_of_full(const InducedRepDesc& rep) { return std::min(rep.p1, rep.p2); }

/// Twist chi1 x chi2 by the central character chi2^{-1}, giving chi x 1 with
/// the same reducibility and composition behavior. chi = chi1 * chi2^{-1}
/// carried on the first block. `swapped_sides` is always false; the flag
/// exists so callers translating transform-side parameters can reuse the
/// return shape.
struct NormalizedRep {
  Character chi;
  bool swapped_sides = false;
};

inline NormalizedRep normalize(const InducedRepDesc& rep) {
  Character chi;
  chi.field = rep.field;
  chi.p = rep.p1;
  chi.sign_exp = ((rep.chi1.sign_exp - rep.chi2.sign_exp) % 2 + 2) % 2;
  chi.alpha_exp = rep.chi1.alpha_exp - rep.chi2.alpha_exp;
  chi.nu_exp = rep.chi1.nu_exp - rep.chi2.nu_exp;
  // A quotient of two ramified characters may in fact be unramified; without
  // the underlying data we keep the conservative flag.
  chi.ramified = rep.chi1.ramified || rep.chi2.ramified;
  return NormalizedRep{chi, false};
}

/// Modular character of the block-upper-triangular parabolic with block
/// sizes (p1, p2): the pair (nu^{p2} on GL_{p1}, nu^{-p1} on GL_{p2}).
inline std::pair<Character, Character> modular_character(FieldKind field, int p1, int p2) {
  if (p1 < 1 || p2 < 1) throw validation_error("p1/p2: block sizes must be positive");
  return {nu_power(field, p1, Rat(p2)), nu_power(field, p2, Rat(-p1))};
}

}  // namespace dps
