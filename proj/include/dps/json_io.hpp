#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "dps/character.hpp"
#include "dps/derivatives.hpp"
#include "dps/grassmann.hpp"
#include "dps/infchar.hpp"
#include "dps/reducibility.hpp"
#include "dps/spectral.hpp"

namespace dps::io {

using nlohmann::json;

/// Rationals travel as "num/den" strings so reports never pick up float
/// drift.
inline json rat_json(const Rat& q) { return to_string(q); }

inline Rat rat_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw validation_error(field + ": expected an integer or a \"num/den\" string");
}

namespace detail {

inline long long small_int(const BigInt& v, const std::string& what) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max())
    throw validation_error(what + ": exponent out of serializable range");
  return v.convert_to<long long>();
}

inline json rat_pair(const Rat& q) {
  return json::array({small_int(rat_num(q), "rational"), small_int(rat_den(q), "rational")});
}

}  // namespace detail

inline json character_json(const Character& chi) {
  json j;
  j["field"] = to_string(chi.field);
  j["p"] = chi.p;
  j["sign_exp"] = chi.field == FieldKind::Real ? json(chi.sign_exp % 2) : json(nullptr);
  j["alpha_exp"] = chi.field == FieldKind::Complex ? json(chi.alpha_exp) : json(nullptr);
  j["nu_re"] = detail::rat_pair(chi.nu_exp.re);
  j["nu_im"] = detail::rat_pair(chi.nu_exp.im);
  j["ramified"] = chi.ramified;
  j["text"] = format_exponents(chi);
  return j;
}

inline Character character_from_json(const json& j) {
  const FieldKind field = parse_field(j.at("field").get<std::string>());
  const int p = j.at("p").get<int>();
  std::optional<int> sign, alpha;
  if (j.contains("sign_exp") && !j["sign_exp"].is_null()) sign = j["sign_exp"].get<int>();
  if (j.contains("alpha_exp") && !j["alpha_exp"].is_null()) alpha = j["alpha_exp"].get<int>();
  auto pair_to_rat = [](const json& p2, const std::string& what) {
    if (!p2.is_array() || p2.size() != 2) throw validation_error(what + ": expected [num, den]");
    return Rat(BigInt(p2[0].get<long long>()), BigInt(p2[1].get<long long>()));
  };
  CRat nu;
  if (j.contains("nu_re")) nu.re = pair_to_rat(j["nu_re"], "nu_re");
  if (j.contains("nu_im")) nu.im = pair_to_rat(j["nu_im"], "nu_im");
  const bool ram = j.value("ramified", false);
  return make_character(field, p, sign, alpha, nu, ram);
}

inline json verdict_json(const ReducibilityVerdict& v, int length_bound) {
  json conditions = json::array();
  for (const ConditionMatch& m : v.matched) {
    json c;
    c["tag"] = to_string(m.tag);
    c["k"] = m.k;
    c["l"] = m.l ? json(*m.l) : json(nullptr);
    conditions.push_back(c);
  }
  json j;
  j["reducible"] = v.reducible;
  j["conditions"] = conditions;
  j["method"] = v.method == Method::ClosedForm ? "closed" : "recursive";
  j["length_upper_bound"] = length_bound;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline json profile_json(const CompositionProfile& p) {
  json j;
  j["reducible"] = p.reducible;
  j["direction"] = to_string(p.direction);
  j["rank_of_parent"] = p.rank_of_parent;
  j["length_exact"] = p.length_exact ? json(*p.length_exact) : json(nullptr);
  j["length_bound"] = p.length_bound;
  if (p.finite_dim_constituent) {
    json c;
    c["side"] = p.finite_dim_constituent->side == FiniteDimWitness::Side::Submodule
                    ? "submodule"
                    : "quotient";
    c["character"] = p.finite_dim_constituent->character
                         ? character_json(*p.finite_dim_constituent->character)
                         : json(nullptr);
    j["finite_dim_constituent"] = c;
  } else {
    j["finite_dim_constituent"] = nullptr;
  }
  j["intertwining_image_note"] = p.intertwining_image_note;
  return j;
}

/// Multisets as sorted arrays of [re_num, re_den, im_num, im_den].
inline json multiset_json(const CNumberMultiset& ms) {
  json rows = json::array();
  for (const CRat& z : ms.entries) {
    rows.push_back(json::array({detail::small_int(rat_num(z.re), "entry"),
                                detail::small_int(rat_den(z.re), "entry"),
                                detail::small_int(rat_num(z.im), "entry"),
                                detail::small_int(rat_den(z.im), "entry")}));
  }
  return rows;
}

inline json infchar_json(const InfChar& ic) {
  json comps = json::array();
  for (const CNumberMultiset& ms : ic.components) comps.push_back(multiset_json(ms));
  json j;
  j["components"] = comps;
  return j;
}

inline json mc_json(const MCEstimate& est) {
  json j;
  j["value"] = est.value;
  j["stderr"] = est.stderr_;
  j["samples"] = est.samples;
  j["seed"] = est.seed;
  j["rejected"] = est.rejected;
  if (est.value_im) {
    j["value_im"] = *est.value_im;
    j["stderr_im"] = *est.stderr_im;
  }
  return j;
}

inline json mero_json(const MeroValue& v) {
  json j;
  j["pole_order"] = v.pole_order;
  j["leading_re"] = v.leading.real();
  j["leading_im"] = v.leading.imag();
  j["exact_zero"] = v.exact_zero;
  return j;
}

inline json table_json(const SpectralTable& t) {
  json rows = json::array();
  for (size_t m = 0; m < t.rows.size(); ++m) {
    json r = mero_json(t.rows[m]);
    r["m"] = m;
    rows.push_back(r);
  }
  json j;
  j["n"] = t.n;
  j["alpha0"] = rat_json(t.alpha0);
  j["M"] = t.M;
  j["rows"] = rows;
  return j;
}

inline std::string table_csv(const SpectralTable& t) {
  std::ostringstream out;
  out << "m,pole_order,leading_re,leading_im,exact_zero\n";
  out.precision(17);
  for (size_t m = 0; m < t.rows.size(); ++m) {
    const MeroValue& v = t.rows[m];
    out << m << ',' << v.pole_order << ',' << v.leading.real() << ',' << v.leading.imag() << ','
        << (v.exact_zero ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace dps::io
