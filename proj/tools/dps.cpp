// Batch front-end: parse a scenario (from flags or a JSON file), dispatch to
// the engines, and emit a reproducible JSON/CSV report.
//
// Exit codes: 0 success, 2 validation error, 3 engine precondition error,
// 4 crosscheck failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dps/scenario.hpp"

namespace {

struct GlobalOpts {
  std::string scenario_path;
  std::string out_path;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
};

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw dps::validation_error("out: cannot open '" + out_path + "' for writing");
  f << text;
}

int emit(const dps::RunResult& result, const GlobalOpts& g) {
  if (g.format == "csv") {
    if (result.csv.empty())
      throw dps::validation_error("format: this verb has no CSV form; use json");
    write_text(g.out_path, result.csv);
  } else {
    write_text(g.out_path, result.report.dump(2) + "\n");
  }
  return result.crosscheck_failed ? 4 : 0;
}

int run_batch(const GlobalOpts& g) {
  std::ifstream f(g.scenario_path);
  if (!f) throw dps::validation_error("scenario: cannot open '" + g.scenario_path + "'");
  dps::json doc = dps::json::parse(f, nullptr, /*allow_exceptions=*/true);
  dps::json reports = dps::json::array();
  int exit_code = 0;
  const dps::json jobs = doc.is_array() ? doc : dps::json::array({doc});
  for (const dps::json& job : jobs) {
    dps::Scenario s = dps::scenario_from_json(job);
    if (!s.seed && g.seed) s.seed = g.seed;
    dps::RunResult r = dps::run_scenario(s);
    if (r.crosscheck_failed) exit_code = 4;
    reports.push_back(std::move(r.report));
  }
  write_text(g.out_path, reports.dump(2) + "\n");
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degenerate principal series toolkit: reducibility, composition profiles, "
               "infinitesimal characters, and the alpha-cosine transform"};
  app.require_subcommand(0, 1);

  GlobalOpts g;
  app.add_option("--scenario", g.scenario_path, "run scenarios from a JSON file (object or array)");
  app.add_option("--out", g.out_path, "write the report here instead of stdout");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  std::uint64_t seed_flag = 0;
  auto* seed_opt = app.add_option("--seed", seed_flag, "seed recorded in the report");

  dps::Scenario s;

  auto* decide = app.add_subcommand("decide", "reducibility of chi x 1");
  auto* profile = app.add_subcommand("profile", "composition-series profile of chi x 1");
  auto* infchar = app.add_subcommand("infchar", "infinitesimal character of chi x 1");
  std::string field, chi_text, method = "closed";
  int n = 0, p1 = 0;
  bool ramified = false;
  for (CLI::App* cmd : {decide, profile, infchar}) {
    cmd->add_option("--field", field, "R, C, or NA")->required();
    cmd->add_option("--n", n, "size of GL_n")->required();
    cmd->add_option("--p1", p1, "size of the first block")->required();
    cmd->add_option("--chi", chi_text, "character, e.g. 'eps^1*nu^{3/2}'")->required();
    cmd->add_flag("--ramified", ramified, "mark a non-archimedean character as ramified");
  }
  decide->add_option("--method", method, "closed or recursive");

  auto* mc = app.add_subcommand("mc", "Monte-Carlo cosine transform on Gr_i(R^n)");
  int mc_n = 0, mc_i = 0, workers = 1;
  long long mc_samples = 100000;
  std::string mc_alpha = "1", mc_f = "const";
  mc->add_option("--n", mc_n, "ambient dimension")->required();
  mc->add_option("--i", mc_i, "subspace dimension")->required();
  mc->add_option("--alpha", mc_alpha, "exponent: number, num/den, or re,im")->required();
  mc->add_option("--N", mc_samples, "sample count");
  mc->add_option("--f", mc_f, "integrand: const or cos2_base");
  mc->add_option("--workers", workers, "worker threads");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue germ table at alpha0 (i = 1)");
  int sp_n = 0, sp_M = 40;
  std::string sp_alpha0;
  spectrum->add_option("--n", sp_n, "ambient dimension")->required();
  spectrum->add_option("--alpha0", sp_alpha0, "expansion point, num/den")->required();
  spectrum->add_option("--M", sp_M, "harmonic truncation bound");

  auto* exceptional = app.add_subcommand("exceptional", "non-invertibility locus of S^i_alpha");
  int ex_n = 0, ex_i = 0;
  std::string ex_lo, ex_hi;
  exceptional->add_option("--n", ex_n)->required();
  exceptional->add_option("--i", ex_i)->required();
  exceptional->add_option("--lo", ex_lo, "range start, num/den")->required();
  exceptional->add_option("--hi", ex_hi, "range end, num/den")->required();

  auto* crosscheck = app.add_subcommand("crosscheck", "batch consistency grids");
  std::string grid;
  int cc_nmax = 8, cc_nmin = 2, cc_M = 40, cc_den = 4;
  long long cc_amin = -12, cc_amax = 8;
  crosscheck->add_option("--grid", grid, "agreement, prediction, or translation")->required();
  crosscheck->add_option("--n-max", cc_nmax);
  crosscheck->add_option("--n-min", cc_nmin);
  crosscheck->add_option("--alpha-min", cc_amin);
  crosscheck->add_option("--alpha-max", cc_amax);
  crosscheck->add_option("--M", cc_M);
  crosscheck->add_option("--den-max", cc_den);

  CLI11_PARSE(app, argc, argv);

  try {
    if (seed_opt->count() > 0) g.seed = seed_flag;
    if (!g.scenario_path.empty()) return run_batch(g);
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }

    s.seed = g.seed;
    s.output = g.format;
    if (decide->parsed() || profile->parsed() || infchar->parsed()) {
      s.verb = decide->parsed() ? "decide" : profile->parsed() ? "profile" : "infchar";
      s.params = {{"field", field}, {"n", n}, {"p1", p1}, {"chi", chi_text}};
      if (ramified) s.params["ramified"] = true;
      if (decide->parsed()) s.params["method"] = method;
    } else if (mc->parsed()) {
      s.verb = "mc";
      dps::json alpha;
      if (auto comma = mc_alpha.find(','); comma != std::string::npos) {
        alpha = dps::json::array(
            {std::stod(mc_alpha.substr(0, comma)), std::stod(mc_alpha.substr(comma + 1))});
      } else {
        alpha = mc_alpha;
      }
      s.params = {{"n", mc_n}, {"i", mc_i},       {"alpha", alpha},
                  {"N", mc_samples}, {"f", mc_f}, {"workers", workers}};
      if (g.seed) s.params["seed"] = *g.seed;
    } else if (spectrum->parsed()) {
      s.verb = "spectrum";
      s.params = {{"n", sp_n}, {"alpha0", sp_alpha0}, {"M", sp_M}};
    } else if (exceptional->parsed()) {
      s.verb = "exceptional";
      s.params = {{"n", ex_n}, {"i", ex_i}, {"lo", ex_lo}, {"hi", ex_hi}};
    } else if (crosscheck->parsed()) {
      s.verb = "crosscheck";
      s.params = {{"grid", grid}};
      if (grid == "agreement") {
        s.params["n_max"] = cc_nmax;
        s.params["nu_den_max"] = cc_den;
      } else if (grid == "prediction") {
        s.params["alpha_min"] = cc_amin;
        s.params["alpha_max"] = cc_amax;
        s.params["M"] = cc_M;
      } else {
        s.params["n_min"] = cc_nmin;
        s.params["n_max"] = cc_nmax;
        s.params["alpha_min"] = cc_amin;
        s.params["alpha_max"] = cc_amax;
        s.params["den_max"] = cc_den;
      }
    }
    return emit(dps::run_scenario(s), g);
  } catch (const dps::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const dps::precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 3;
  } catch (const dps::json::exception& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
