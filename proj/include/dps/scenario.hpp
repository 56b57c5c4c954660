#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "dps/grids.hpp"
#include "dps/json_io.hpp"
#include "dps/quadrature.hpp"
#include "dps/version.hpp"

namespace dps {

using nlohmann::json;

/// One batch job: a verb plus its parameters. Reports produced from equal
/// scenarios (and seeds) are byte-identical except for the wall-time field.
struct Scenario {
  std::string verb;
  json params = json::object();
  std::optional<std::uint64_t> seed;
  std::string output = "json";  // "json" or "csv"
};

struct RunResult {
  json report;
  std::string csv;  // set when csv output was requested and the verb has one
  bool crosscheck_failed = false;
};

namespace scenario_detail {

inline const json& need(const json& params, const std::string& key) {
  if (!params.contains(key)) throw validation_error("params." + key + ": required");
  return params.at(key);
}

inline int need_int(const json& params, const std::string& key) {
  const json& v = need(params, key);
  if (!v.is_number_integer()) throw validation_error("params." + key + ": expected an integer");
  return v.get<int>();
}

inline long long need_int64(const json& params, const std::string& key) {
  const json& v = need(params, key);
  if (!v.is_number_integer()) throw validation_error("params." + key + ": expected an integer");
  return v.get<long long>();
}

inline std::string need_string(const json& params, const std::string& key) {
  const json& v = need(params, key);
  if (!v.is_string()) throw validation_error("params." + key + ": expected a string");
  return v.get<std::string>();
}

inline Character parse_chi(const json& params, FieldKind field, int p1) {
  const bool ramified = params.value("ramified", false);
  const json& chi = need(params, "chi");
  if (chi.is_string()) return parse_character(chi.get<std::string>(), field, p1, ramified);
  if (chi.is_object()) return io::character_from_json(chi);
  throw validation_error("params.chi: expected a grammar string or a character object");
}

// --- crosscheck grids ------------------------------------------------------

inline json grid_agreement(const json& params) {
  const int n_max = need_int(params, "n_max");
  const int den_max = params.value("nu_den_max", 4);
  const Rat lo = io::rat_from_json(params.value("nu_min", json(-6)), "params.nu_min");
  const Rat hi = io::rat_from_json(params.value("nu_max", json(6)), "params.nu_max");
  if (n_max < 2 || n_max > 10) throw validation_error("params.n_max: need 2 <= n_max <= 10");
  if (den_max < 1 || den_max > 6) throw validation_error("params.nu_den_max: need 1..6");
  if (hi - lo > 24) throw validation_error("params.nu_min/nu_max: range wider than 24 rejected");

  long long cells = 0;
  json failures = json::array();
  for (FieldKind field : {FieldKind::Real, FieldKind::Complex, FieldKind::NonArchimedean}) {
    for (int n = 2; n <= n_max; ++n) {
      for (int p1 = 1; p1 <= n - 1; ++p1) {
        for (const Character& chi : character_grid(field, p1, den_max, lo, hi)) {
          ++cells;
          const bool closed = is_reducible_closed(field, n, p1, chi).reducible;
          const bool recursive = is_reducible_recursive(field, n, p1, chi).reducible;
          if (closed != recursive) {
            failures.push_back({{"field", to_string(field)},
                                {"n", n},
                                {"p1", p1},
                                {"chi", format_exponents(chi)},
                                {"closed", closed},
                                {"recursive", recursive}});
          }
        }
      }
    }
  }
  json out;
  out["grid"] = "agreement";
  out["cells"] = cells;
  out["failures"] = failures;
  out["passed"] = failures.empty();
  return out;
}

inline json grid_prediction(const json& params) {
  const long long amin = need_int64(params, "alpha_min");
  const long long amax = need_int64(params, "alpha_max");
  const int M = params.value("M", 40);
  if (amin > amax) throw validation_error("params.alpha_min/alpha_max: need alpha_min <= alpha_max");
  if (amax - amin > 64) throw validation_error("params.alpha_min/alpha_max: range wider than 64 rejected");
  if (M < 1 || M > 128) throw validation_error("params.M: need 1..128");
  std::vector<int> ns;
  if (params.contains("n_list")) {
    for (const json& v : params.at("n_list")) ns.push_back(v.get<int>());
  } else {
    ns = {3, 4, 5};
  }

  long long cells = 0;
  json failures = json::array();
  for (int n : ns) {
    for (long long a = amin; a <= amax; ++a) {
      ++cells;
      const Rat alpha0(a);
      const bool spectral = spectral_invertibility(n, alpha0, M).first;
      const bool closed = s_alpha_invertible(n, 1, alpha0);
      if (spectral != closed) {
        failures.push_back({{"n", n},
                            {"alpha0", to_string(alpha0)},
                            {"spectral", spectral},
                            {"closed_form", closed}});
      }
    }
  }
  json out;
  out["grid"] = "prediction";
  out["cells"] = cells;
  out["failures"] = failures;
  out["passed"] = failures.empty();
  return out;
}

inline json grid_translation(const json& params) {
  const int n_min = params.value("n_min", 2);
  const int n_max = need_int(params, "n_max");
  const long long amin = need_int64(params, "alpha_min");
  const long long amax = need_int64(params, "alpha_max");
  const int den_max = params.value("den_max", 4);
  if (n_min < 2 || n_max > 12 || n_min > n_max)
    throw validation_error("params.n_min/n_max: need 2 <= n_min <= n_max <= 12");
  if (amin > amax || amax - amin > 64)
    throw validation_error("params.alpha_min/alpha_max: bounded range required");
  if (den_max < 1 || den_max > 6) throw validation_error("params.den_max: need 1..6");

  long long cells = 0;
  json failures = json::array();
  for (int n = n_min; n <= n_max; ++n) {
    for (const Rat& alpha : rational_grid(Rat(amin), Rat(amax), den_max)) {
      ++cells;
      const SAlphaReport rep = s_alpha_report(n, 1, alpha);
      if (!rep.consistent) {
        failures.push_back({{"n", n},
                            {"alpha", to_string(alpha)},
                            {"invertible", rep.invertible},
                            {"translated_reducible", rep.translated_reducible}});
      }
    }
  }
  json out;
  out["grid"] = "translation";
  out["cells"] = cells;
  out["failures"] = failures;
  out["passed"] = failures.empty();
  return out;
}

}  // namespace scenario_detail

inline Scenario scenario_from_json(const json& j) {
  Scenario s;
  if (!j.contains("verb") || !j.at("verb").is_string())
    throw validation_error("verb: required string");
  s.verb = j.at("verb").get<std::string>();
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw validation_error("params: expected an object");
    s.params = j.at("params");
  }
  if (j.contains("seed") && !j.at("seed").is_null())
    s.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("output") && !j.at("output").is_null())
    s.output = j.at("output").get<std::string>();
  if (s.output != "json" && s.output != "csv")
    throw validation_error("output: expected \"json\" or \"csv\"");
  return s;
}

/// Dispatches a validated scenario and wraps the engine answer in a
/// reproducible report (inputs echoed, version, seed, wall time).
inline RunResult run_scenario(const Scenario& s) {
  using scenario_detail::need;
  using scenario_detail::need_int;
  using scenario_detail::need_int64;
  using scenario_detail::need_string;
  const auto t0 = std::chrono::steady_clock::now();

  RunResult result;
  json engine;

  if (s.verb == "decide") {
    const FieldKind field = parse_field(need_string(s.params, "field"));
    const int n = need_int(s.params, "n");
    const int p1 = need_int(s.params, "p1");
    const Character chi = scenario_detail::parse_chi(s.params, field, p1);
    const std::string method = s.params.value("method", "closed");
    ReducibilityVerdict v;
    if (method == "closed") {
      v = is_reducible_closed(field, n, p1, chi);
    } else if (method == "recursive") {
      v = is_reducible_recursive(field, n, p1, chi);
    } else {
      throw validation_error("params.method: expected \"closed\" or \"recursive\"");
    }
    engine = io::verdict_json(v, length_upper_bound(field, n, p1, chi));
  } else if (s.verb == "profile") {
    const FieldKind field = parse_field(need_string(s.params, "field"));
    const int n = need_int(s.params, "n");
    const int p1 = need_int(s.params, "p1");
    const Character chi = scenario_detail::parse_chi(s.params, field, p1);
    engine = io::profile_json(composition_profile(field, n, p1, chi));
  } else if (s.verb == "infchar") {
    const FieldKind field = parse_field(need_string(s.params, "field"));
    const int n = need_int(s.params, "n");
    const int p1 = need_int(s.params, "p1");
    const Character chi = scenario_detail::parse_chi(s.params, field, p1);
    engine = io::infchar_json(infchar_of(field, n, p1, chi));
  } else if (s.verb == "mc") {
    const int n = need_int(s.params, "n");
    const int i = need_int(s.params, "i");
    const json& aj = need(s.params, "alpha");
    std::complex<double> alpha;
    if (aj.is_number()) {
      alpha = std::complex<double>(aj.get<double>(), 0.0);
    } else if (aj.is_string()) {
      alpha = std::complex<double>(to_double(parse_rational(aj.get<std::string>())), 0.0);
    } else if (aj.is_array() && aj.size() == 2) {
      alpha = std::complex<double>(aj[0].get<double>(), aj[1].get<double>());
    } else {
      throw validation_error("params.alpha: expected a number, \"num/den\", or [re, im]");
    }
    const long long N = need_int64(s.params, "N");
    const std::uint64_t seed = s.params.contains("seed")
                                   ? s.params.at("seed").get<std::uint64_t>()
                                   : s.seed.value_or(0);
    const int workers = s.params.value("workers", 1);
    const std::string fname = s.params.value("f", "const");
    if (i < 1 || i > n - 1) throw precondition_error("params.i: need 1 <= i <= n-1");
    // Base point: the span of the first i coordinate vectors.
    Eigen::MatrixXd base = Eigen::MatrixXd::Zero(n, i);
    for (int c = 0; c < i; ++c) base(c, c) = 1.0;
    const Frame e = Frame::from_orthonormal(base);
    std::function<double(const Frame&)> f;
    if (fname == "const") {
      f = [](const Frame&) { return 1.0; };
    } else if (fname == "cos2_base") {
      f = [e](const Frame& fr) {
        const double c = cosine(fr, e);
        return c * c;
      };
    } else {
      throw validation_error("params.f: expected \"const\" or \"cos2_base\"");
    }
    engine = io::mc_json(cosine_transform_mc(f, e, alpha, N, seed, workers));
  } else if (s.verb == "spectrum") {
    const int n = need_int(s.params, "n");
    const Rat alpha0 = io::rat_from_json(need(s.params, "alpha0"), "params.alpha0");
    const int M = s.params.value("M", 40);
    auto [invertible, table] = spectral_invertibility(n, alpha0, M);
    engine = io::table_json(table);
    engine["invertible"] = invertible;
    if (s.output == "csv") result.csv = io::table_csv(table);
  } else if (s.verb == "exceptional") {
    const int n = need_int(s.params, "n");
    const int i = need_int(s.params, "i");
    const Rat lo = io::rat_from_json(need(s.params, "lo"), "params.lo");
    const Rat hi = io::rat_from_json(need(s.params, "hi"), "params.hi");
    json list = json::array();
    for (const Rat& a : exceptional_alphas(n, i, lo, hi)) list.push_back(to_string(a));
    engine["exceptional"] = list;
    engine["n"] = n;
    engine["i"] = i;
  } else if (s.verb == "crosscheck") {
    const std::string grid = need_string(s.params, "grid");
    if (grid == "agreement") {
      engine = scenario_detail::grid_agreement(s.params);
    } else if (grid == "prediction") {
      engine = scenario_detail::grid_prediction(s.params);
    } else if (grid == "translation") {
      engine = scenario_detail::grid_translation(s.params);
    } else {
      throw validation_error("params.grid: expected agreement, prediction, or translation");
    }
    result.crosscheck_failed = !engine.value("passed", false);
  } else {
    throw validation_error("verb: unknown verb '" + s.verb + "'");
  }

  const auto t1 = std::chrono::steady_clock::now();
  json report;
  report["verb"] = s.verb;
  report["params"] = s.params;
  report["seed"] = s.seed ? json(*s.seed) : json(nullptr);
  report["output"] = s.output;
  report["engine"] = engine;
  report["version"] = kVersion;
  report["wall_time_ms"] =
      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0;
  result.report = std::move(report);
  return result;
}

}  // namespace dps
