#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>

#include "algtheta/error.hpp"
#include "algtheta/io.hpp"
#include "algtheta/kp.hpp"

using namespace algtheta;
namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::uint64_t seed = 1;
  int wmax = -1;
  int n_order = 9;
  int bases = 5;
  bool discover_degree = false;
  int delta_max = 4;
  std::string output;
};

/// A relative input that does not exist is looked up in $ALGTHETA_FIXTURES, then in the
/// fixtures directory of the source tree.
fs::path resolve_input(const std::string& input) {
  if (input.empty()) throw InputError("--input is required for this command");
  const fs::path p(input);
  if (fs::exists(p) || p.is_absolute()) return p;
  if (const char* env = std::getenv("ALGTHETA_FIXTURES")) {
    if (fs::exists(fs::path(env) / p)) return fs::path(env) / p;
  }
  if (fs::exists(fs::path(ALGTHETA_FIXTURE_DIR) / p)) return fs::path(ALGTHETA_FIXTURE_DIR) / p;
  return p;
}

struct Pipeline {
  CurveSpec curve;
  std::vector<SingularityData> sing;
};

Pipeline load(const RunConfig& cfg) {
  Pipeline p;
  p.curve = complete_curve(load_curve_spec(resolve_input(cfg.input)));
  p.sing = singularity_analysis(p.curve);
  return p;
}

void report_curve(Report& r, const CurveSpec& c) {
  r.begin("curve");
  r.add("name", c.name.empty() ? std::string("(unnamed)") : c.name);
  r.add("genus", static_cast<long>(c.genus()));
  r.add("base_point", to_string(c.base_point));
  for (std::size_t i = 0; i < c.differentials.size(); ++i)
    r.add("omega" + std::to_string(i + 1), "(" + c.differentials[i].to_string() + ") du");
  r.end();
}

bool from_tau_applies(const Pipeline& p, const TauPolynomial& t) {
  return t.exact && p.sing.size() == 1 && p.sing.front().point.infinite;
}

ImplicitizationOptions implicitization_options(const RunConfig& cfg) {
  ImplicitizationOptions o;
  o.seed = cfg.seed;
  o.discover_degree = cfg.discover_degree;
  return o;
}

/// Theta from tau when the curve allows it, otherwise (or with --discover-degree) by
/// implicitization.
ThetaPolynomial compute_theta(const Pipeline& p, const TauPolynomial& t, const RunConfig& cfg) {
  if (!cfg.discover_degree && from_tau_applies(p, t)) {
    try {
      return theta_from_tau(t, p.curve, p.sing);
    } catch (const RejectedCurve&) {
      throw;
    } catch (const Error&) {
      // basis not in normal form
    }
  }
  return theta_by_implicitization(p.curve, p.sing, implicitization_options(cfg));
}

void report_implicitization(Report& r, const ImplicitizationStats& s) {
  r.begin("implicitization");
  r.add("degree", static_cast<long>(s.degree));
  r.add("monomials", static_cast<long>(s.monomials));
  r.add("fit_samples", static_cast<long>(s.fit_samples));
  r.add("fresh_samples", static_cast<long>(s.fresh_samples));
  r.add("primes", static_cast<long>(s.primes));
  r.end();
}

void cmd_classify(Report& r, const RunConfig& cfg) {
  const CurveSpec c = complete_curve(load_curve_spec(resolve_input(cfg.input)));
  report_curve(r, c);
  if (c.parametrization) report_classification(r, classify_algebraic(normalize_base_point(c).parametrization.value()));
  const auto sing = singularity_analysis(c);
  report_singularities(r, sing);
  r.add("verdict", "algebraic theta divisor (rational, unibranch Gorenstein singularities)");
}

void cmd_tau(Report& r, const RunConfig& cfg) {
  const Pipeline p = load(cfg);
  report_curve(r, p.curve);
  report_singularities(r, p.sing);
  report_tau(r, tau(build_frame(p.curve, p.sing, cfg.wmax)));
}

void cmd_theta(Report& r, const RunConfig& cfg, bool with_degree) {
  const Pipeline p = load(cfg);
  report_curve(r, p.curve);
  report_singularities(r, p.sing);
  const TauPolynomial t = tau(build_frame(p.curve, p.sing, cfg.wmax));
  const ThetaPolynomial th = compute_theta(p, t, cfg);
  report_theta(r, th);
  if (with_degree) report_degree(r, degree_report(th, p.sing));
}

void cmd_kp(Report& r, const RunConfig& cfg) {
  const Pipeline p = load(cfg);
  report_curve(r, p.curve);
  const TauPolynomial t = tau(build_frame(p.curve, p.sing, cfg.wmax));
  const ThetaPolynomial th = compute_theta(p, t, cfg);
  report_theta(r, th);
  report_kp(r, "kp_theta", kp_suite(th, abel_data(p.curve, 3), cfg.n_order, cfg.bases, cfg.seed));
  if (t.exact)
    report_kp(r, "kp_tau", tau_kp_suite(t, cfg.n_order, cfg.bases, cfg.seed));
  else
    r.add("kp_tau", "skipped (truncated tau)");
}

void cmd_full(Report& r, const RunConfig& cfg) {
  const CurveSpec c = complete_curve(load_curve_spec(resolve_input(cfg.input)));
  report_curve(r, c);
  if (c.parametrization) report_classification(r, classify_algebraic(normalize_base_point(c).parametrization.value()));
  const Pipeline p{c, singularity_analysis(c)};
  report_singularities(r, p.sing);
  const TauPolynomial t = tau(build_frame(p.curve, p.sing, cfg.wmax));
  report_tau(r, t);

  std::optional<ThetaPolynomial> from_tau;
  if (from_tau_applies(p, t)) {
    try {
      from_tau = theta_from_tau(t, p.curve, p.sing);
    } catch (const RejectedCurve&) {
      throw;
    } catch (const Error& e) {
      r.add("theta_from_tau", std::string("not applicable: ") + e.what());
    }
  }
  ImplicitizationStats stats;
  const ThetaPolynomial implicit = theta_by_implicitization(p.curve, p.sing, implicitization_options(cfg), &stats);
  const ThetaPolynomial& th = from_tau ? *from_tau : implicit;
  report_theta(r, th);
  report_implicitization(r, stats);
  if (from_tau) r.add("theta_paths_agree", from_tau->polynomial == implicit.polynomial);
  report_degree(r, degree_report(th, p.sing));
  report_relation(r, relation_check(p.curve, p.sing, t, th, -1, cfg.seed));
  report_kp(r, "kp_theta", kp_suite(th, abel_data(p.curve, 3), cfg.n_order, cfg.bases, cfg.seed));
  if (t.exact)
    report_kp(r, "kp_tau", tau_kp_suite(t, cfg.n_order, cfg.bases, cfg.seed));
  else
    r.add("kp_tau", "skipped (truncated tau)");
}

struct SweepRow {
  std::string semigroup;
  int delta = 0;
  int lambda = 0;
  int degree = 0;
  int bound = 0;
  bool attained = false;
  bool hyperelliptic = false;
  std::string discover;
};

SweepRow sweep_one(const NumericalSemigroup& s, const RunConfig& cfg) {
  const CurveSpec c = monomial_curve(s);
  const auto sing = singularity_analysis(c);
  const ThetaPolynomial th = theta_from_tau(tau(build_frame(c, sing)), c, sing);
  const DegreeReport d = degree_report(th, sing);
  SweepRow row{s.to_string(), s.delta(), sing.front().lambda.size(), d.total_degree, d.bound, d.bound_attained,
               s.generators() == std::vector<int>{2, 2 * s.delta() + 1}, "-"};
  if (cfg.discover_degree) {
    ImplicitizationOptions o;
    o.seed = cfg.seed;
    o.discover_degree = true;
    ImplicitizationStats st;
    const ThetaPolynomial imp = theta_by_implicitization(c, sing, o, &st);
    row.discover = std::to_string(st.degree) + (imp.polynomial == th.polynomial ? " (equal)" : " (differs)");
  }
  return row;
}

void cmd_sweep(Report& r, const RunConfig& cfg) {
  const auto semigroups = enumerate_gorenstein(cfg.delta_max);
  std::vector<std::future<SweepRow>> jobs;
  for (const auto& s : semigroups) jobs.push_back(std::async(std::launch::async, sweep_one, s, std::cref(cfg)));
  r.add("delta_max", static_cast<long>(cfg.delta_max));
  r.add("columns", "semigroup | delta | |lambda| | deg theta | g(g+1)/2 | attained | hyperelliptic | discover | ok");
  bool all = true;
  r.begin("rows");
  for (auto& j : jobs) {
    const SweepRow row = j.get();
    const bool ok = row.degree == row.lambda && row.degree <= row.bound && row.attained == row.hyperelliptic &&
                    (row.discover == "-" || row.discover == std::to_string(row.degree) + " (equal)");
    all = all && ok;
    r.add(row.semigroup, std::to_string(row.delta) + " | " + std::to_string(row.lambda) + " | " + std::to_string(row.degree) +
                             " | " + std::to_string(row.bound) + " | " + (row.attained ? "yes" : "no") + " | " +
                             (row.hyperelliptic ? "yes" : "no") + " | " + row.discover + " | " + (ok ? "yes" : "no"));
  }
  r.end();
  r.add("semigroups", static_cast<long>(semigroups.size()));
  r.add("verdict", all);
}

int run(const RunConfig& cfg) {
  Report r;
  r.add("command", cfg.command);
  if (cfg.command == "classify") cmd_classify(r, cfg);
  else if (cfg.command == "tau") cmd_tau(r, cfg);
  else if (cfg.command == "theta") cmd_theta(r, cfg, false);
  else if (cfg.command == "degree") cmd_theta(r, cfg, true);
  else if (cfg.command == "kp-check") cmd_kp(r, cfg);
  else if (cfg.command == "full-report") cmd_full(r, cfg);
  else if (cfg.command == "sweep") cmd_sweep(r, cfg);
  if (cfg.output.empty()) {
    std::cout << r.str();
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw InputError("cannot write " + cfg.output);
    out << r.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Algebraic theta functions and KP tau functions of rational unibranch Gorenstein curves"};
  app.add_option("command", cfg.command, "classify | tau | theta | degree | kp-check | full-report | sweep")
      ->required()
      ->check(CLI::IsMember({"classify", "tau", "theta", "degree", "kp-check", "full-report", "sweep"}));
  app.add_option("--input", cfg.input, "curve spec file (JSON)");
  app.add_option("--seed", cfg.seed, "seed for implicitization samples and KP base points")->capture_default_str();
  app.add_option("--wmax", cfg.wmax, "tau truncation weight (default: |lambda|, or 2 sum |lambda_j|)");
  app.add_option("--n-order", cfg.n_order, "KP expansion order N")->capture_default_str()->check(CLI::Range(6, 40));
  app.add_option("--bases", cfg.bases, "number of KP base points")->capture_default_str()->check(CLI::Range(1, 64));
  app.add_flag("--discover-degree", cfg.discover_degree, "implicitize with increasing degree bounds");
  app.add_option("--delta-max", cfg.delta_max, "sweep: largest delta")->capture_default_str()->check(CLI::Range(1, 8));
  app.add_option("--output", cfg.output, "write the report here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run(cfg);
  } catch (const RejectedCurve& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
