#include "dmorse/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "dmorse/bound.hpp"
#include "dmorse/oracle.hpp"
#include "dmorse/scatter.hpp"
#include "dmorse/verify.hpp"

namespace dmorse::cli {

namespace {

using nlohmann::json;

// full double precision, deterministic across runs
std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["model"] = {{"A", cfg.A},
                {"omega", cfg.omega},
                {"xi", cfg.xi},
                {"lambda_c", cfg.lambda_c}};
  if (cfg.energy) j["energy"] = *cfg.energy;
  if (cfg.bound_n) j["bound_n"] = *cfg.bound_n;
  if (cfg.branch) j["branch"] = *cfg.branch;
  j["alpha"] = cfg.alpha;
  j["n_terms"] = cfg.n_terms;
  j["grid"] = cfg.grid;
  j["format"] = cfg.format == OutputFormat::csv ? "csv" : "json";
  if (cfg.only) j["only"] = *cfg.only;
  if (cfg.zeta_fault != 0.0) j["zeta_fault"] = cfg.zeta_fault;
  return j;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // NaN renders as nan/null
};

void write_table(const RunConfig& cfg, const Table& table, std::ostream& out) {
  if (cfg.format == OutputFormat::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << (c ? "," : "") << fmt17(row[c]);
      out << "\n";
    }
    return;
  }
  json doc;
  doc["config"] = config_to_json(cfg);
  doc["results"] = json::array();
  for (const auto& row : table.rows) {
    json r;
    for (std::size_t c = 0; c < row.size(); ++c)
      r[table.columns[c]] = std::isnan(row[c]) ? json() : json(row[c]);
    doc["results"].push_back(r);
  }
  out << doc.dump(2) << "\n";
}

oracle::Grid parse_grid(const std::string& text) {
  double lo = 0.0, hi = 0.0;
  int n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(text);
  if (!(is >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':')
    throw std::invalid_argument("grid must be given as x_min:x_max:n_points");
  if (n <= 0) throw std::invalid_argument("grid is empty");
  if (n < 3) throw std::invalid_argument("grid needs at least 3 points");
  if (!(lo < hi)) throw std::invalid_argument("grid requires x_min < x_max");
  return oracle::Grid(lo, hi, n);
}

int with_output(const RunConfig& cfg, std::ostream& fallback,
                const std::function<int(std::ostream&)>& body, std::ostream& err) {
  if (!cfg.output) return body(fallback);
  std::ofstream f(*cfg.output);
  if (!f) {
    err << "error: cannot open output file " << *cfg.output << "\n";
    return 2;
  }
  return body(f);
}

double require_number(const json& j, const std::string& key) {
  if (!j.at(key).is_number())
    throw std::invalid_argument("config: " + key + " must be a number");
  return j.at(key).get<double>();
}

}  // namespace

ModelParams RunConfig::model() const { return ModelParams(A, omega, xi, lambda_c); }

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("config: cannot open " + path);
  json j;
  try {
    f >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }

  RunConfig cfg;
  static const std::vector<std::string> known = {
      "model", "energy", "bound_n", "branch",     "alpha", "n_terms",
      "grid",  "output", "format",  "zeta_fault", "only"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument("config: unknown key '" + key + "'");
    (void)value;
  }
  if (j.contains("model")) {
    const auto& m = j["model"];
    for (const auto& [key, value] : m.items()) {
      if (key != "A" && key != "omega" && key != "xi" && key != "lambda_c")
        throw std::invalid_argument("config: unknown model key '" + key + "'");
      (void)value;
    }
    if (m.contains("A")) cfg.A = require_number(m, "A");
    if (m.contains("omega")) cfg.omega = require_number(m, "omega");
    if (m.contains("xi")) cfg.xi = require_number(m, "xi");
    if (m.contains("lambda_c")) cfg.lambda_c = require_number(m, "lambda_c");
  }
  if (j.contains("energy")) cfg.energy = require_number(j, "energy");
  if (j.contains("bound_n")) cfg.bound_n = j["bound_n"].get<int>();
  if (j.contains("branch")) cfg.branch = j["branch"].get<std::string>();
  if (j.contains("alpha")) cfg.alpha = require_number(j, "alpha");
  if (j.contains("n_terms")) cfg.n_terms = j["n_terms"].get<int>();
  if (j.contains("grid")) cfg.grid = j["grid"].get<std::string>();
  if (j.contains("output")) cfg.output = j["output"].get<std::string>();
  if (j.contains("only")) cfg.only = j["only"].get<std::string>();
  if (j.contains("zeta_fault")) cfg.zeta_fault = require_number(j, "zeta_fault");
  if (j.contains("format")) {
    const auto s = j["format"].get<std::string>();
    if (s == "csv")
      cfg.format = OutputFormat::csv;
    else if (s == "json")
      cfg.format = OutputFormat::json;
    else
      throw std::invalid_argument("config: format must be csv or json");
  }
  return cfg;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ModelParams model = cfg.model();
  const auto states = bound::spectrum(model);

  const double window = 0.99;
  const auto grid = oracle::shooting_grid(model, -window, window, 4001);
  const auto shot = oracle::shoot_spectrum(model, -window, window, grid);

  Table table;
  table.columns = {"n", "branch", "epsilon", "alpha_n", "valid",
                   "shooting_epsilon", "abs_delta"};
  bool missing = false;
  for (const auto& st : states) {
    double found = std::nan("");
    double delta = std::nan("");
    if (st.valid && std::abs(st.epsilon) < window) {
      double best = 1e30;
      for (double e : shot.energies) {
        if (std::abs(e - st.epsilon) < best) {
          best = std::abs(e - st.epsilon);
          found = e;
        }
      }
      if (best > 1e-5) {
        missing = true;
        found = std::nan("");
      } else {
        delta = best;
      }
    }
    table.rows.push_back({double(st.n), st.branch == bound::Branch::plus ? 1.0 : -1.0,
                          st.epsilon, st.alpha_n, st.valid ? 1.0 : 0.0, found, delta});
  }

  const int code = with_output(
      cfg, out,
      [&](std::ostream& o) {
        write_table(cfg, table, o);
        return 0;
      },
      err);
  if (code != 0) return code;
  if (missing) {
    err << "error: shooting oracle did not converge onto every valid state\n";
    return 3;
  }
  return 0;
}

int cmd_wavefunction(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ModelParams model = cfg.model();
  oracle::Grid grid;
  try {
    grid = parse_grid(cfg.grid);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::function<SpinorSample(double)> sample;
  double epsilon = 0.0;
  if (cfg.bound_n) {
    const auto branch = (cfg.branch.value_or("plus") == "minus") ? bound::Branch::minus
                                                                 : bound::Branch::plus;
    const auto states = bound::spectrum(model);
    const bound::BoundState* match = nullptr;
    for (const auto& st : states)
      if (st.n == *cfg.bound_n && st.branch == branch) match = &st;
    if (!match) {
      err << "error: no bound state with n = " << *cfg.bound_n << "\n";
      return 2;
    }
    if (!match->valid) {
      err << "error: state (n = " << match->n
          << ") is not square integrable; no wavefunction\n";
      return 2;
    }
    epsilon = match->epsilon;
    const bound::BoundState st = *match;
    sample = [model, st](double x) {
      return bound::bound_eigenspinor(model, st, z_of_x(model, x));
    };
  } else if (cfg.energy) {
    epsilon = *cfg.energy;
    const double abs_e = std::abs(epsilon);
    if (abs_e > model.C() && abs_e < 1.0) {
      err << "error: bound-state regime; use spectrum\n";
      return 2;
    }
    if (abs_e <= 1.0) {
      err << "error: scattering requires |epsilon| > 1\n";
      return 2;
    }
    const auto sol = scatter::solve(model, epsilon, cfg.alpha, cfg.n_terms);
    if (sol.weight_regime_warning)
      err << "warning: weight parameters leave the positive-measure regime; "
             "normalization computed from the printed formula\n";
    sample = [model, sol](double x) {
      SpinorSample s = scatter::evaluate_series(model, sol, x);
      s.upper *= sol.normalization;
      s.lower *= sol.normalization;
      return s;
    };
  } else {
    err << "error: need either a bound-state index or a scattering energy\n";
    return 2;
  }

  Table table;
  table.columns = {"x", "z", "phi_upper", "theta_lower", "ode_residual"};
  Eigen::VectorXd upper(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) upper[i] = sample(grid.x(i)).upper;
  const double scale = std::max(upper.cwiseAbs().maxCoeff(), 1e-300);
  const auto k = schrodinger_like_coeffs(model, epsilon);

  for (int i = 0; i < grid.n_points; ++i) {
    const double x = grid.x(i);
    const SpinorSample s = sample(x);
    // pointwise residual with a local 5-point stencil, independent of the grid
    const double h = 1e-4 * std::max(1.0, std::abs(x));
    const double d2 = (-sample(x - 2 * h).upper + 16.0 * sample(x - h).upper -
                       30.0 * s.upper + 16.0 * sample(x + h).upper -
                       sample(x + 2 * h).upper) /
                      (12.0 * h * h);
    const double e1 = std::exp(-model.omega() * x);
    const double res = std::abs(-d2 + ((k.c2 * e1 + k.c1) * e1 + k.c0) * s.upper) / scale;
    table.rows.push_back({x, z_of_x(model, x), s.upper, s.lower, res});
  }

  return with_output(
      cfg, out,
      [&](std::ostream& o) {
        write_table(cfg, table, o);
        return 0;
      },
      err);
}

int cmd_coefficients(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ModelParams model = cfg.model();
  if (!cfg.energy) {
    err << "error: coefficients requires --energy\n";
    return 2;
  }
  if (!(std::abs(*cfg.energy) > 1.0)) {
    err << "error: coefficients are defined for scattering energies |epsilon| > 1\n";
    return 2;
  }
  if (cfg.n_terms < 1) {
    err << "error: n_terms must be >= 1\n";
    return 2;
  }

  const double eps = *cfg.energy;
  const auto args = scatter::cdh_args_of_energy(model, eps, cfg.alpha);
  const Eigen::VectorXd s = specfun::cdh_recursion(args, cfg.n_terms - 1);
  const Eigen::VectorXd f =
      scatter::expansion_coefficients(model, eps, cfg.alpha, cfg.n_terms);
  const auto bp = scatter::balanced_basis(model, eps, cfg.alpha);

  Table table;
  table.columns = {"n", "s_n", "f_n", "recursion_residual"};
  for (int n = 0; n < cfg.n_terms; ++n) {
    double res = std::nan("");
    if (n >= 1 && n + 1 < cfg.n_terms) {
      const auto rc = tridiag::recursion_coefficients(model, bp, eps, n);
      const double lhs = rc.diag * f[n] - rc.sub * f[n - 1] - rc.super * f[n + 1];
      const double sc = std::abs(rc.diag * f[n]) + std::abs(rc.sub * f[n - 1]) +
                        std::abs(rc.super * f[n + 1]);
      res = std::abs(lhs) / std::max(sc, 1e-300);
    }
    table.rows.push_back({double(n), s[n], f[n], res});
  }

  return with_output(
      cfg, out,
      [&](std::ostream& o) {
        write_table(cfg, table, o);
        return 0;
      },
      err);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ModelParams model = cfg.model();
  verify::VerifyOptions options;
  options.zeta_fault = cfg.zeta_fault;
  if (cfg.only) {
    const auto names = verify::suite_names();
    if (std::find(names.begin(), names.end(), *cfg.only) == names.end()) {
      err << "error: unknown suite '" << *cfg.only << "'\n";
      return 2;
    }
    options.only = *cfg.only;
  }

  const auto results = verify::run_checks(model, options);
  bool all = true;
  const int code = with_output(
      cfg, out,
      [&](std::ostream& o) {
        for (const auto& r : results) {
          all = all && r.passed;
          o << (r.passed ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name
            << "  measured=" << fmt17(r.measured) << "  tol=" << fmt17(r.tolerance)
            << "\n";
        }
        o << (all ? "all checks passed" : "some checks FAILED") << "\n";
        return 0;
      },
      err);
  if (code != 0) return code;
  return all ? 0 : 1;
}

int run(int argc, const char* const* argv) {
  CLI::App app{
      "Series solution of the one-dimensional Dirac equation with an "
      "exponential potential: closed-form bound spectrum, tridiagonal wave "
      "operator in a Laguerre spinor basis, continuous dual Hahn expansion "
      "coefficients, and the numerical oracles that certify them.\n"
      "Units: hbar = m = 1; energies in units of m c^2; lambda_c = 1/c."};
  app.require_subcommand(1);

  std::string config_path;
  RunConfig cfg;

  // flags shared by the subcommands; command-line values override the config
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON configuration file");
    sub->add_option("--output", "output file (default: stdout)");
    sub->add_option("--format", "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--A", "potential strength A (nonzero)");
    sub->add_option("--omega", "range parameter omega (> 0)");
    sub->add_option("--xi", "coupling scale xi (> 0)");
    sub->add_option("--lambda-c", "Compton wavelength (> 0, lambda_c*xi < 1)");
  };

  auto* sp = app.add_subcommand("spectrum",
                                "closed-form bound states next to the shooting oracle");
  add_common(sp);

  auto* wf = app.add_subcommand("wavefunction", "sampled spinor wavefunction");
  add_common(wf);
  wf->add_option("--energy", "scattering energy (|epsilon| > 1)");
  wf->add_option("--bound-n", "bound state index");
  wf->add_option("--branch", "bound branch: plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  wf->add_option("--alpha", "basis exponent alpha (> 0)");
  wf->add_option("--n-terms", "series truncation");
  wf->add_option("--grid", "sampling grid x_min:x_max:n_points");

  auto* co = app.add_subcommand("coefficients", "expansion coefficients f_n");
  add_common(co);
  co->add_option("--energy", "scattering energy (|epsilon| > 1)");
  co->add_option("--alpha", "basis exponent alpha (> 0)");
  co->add_option("--n-terms", "number of coefficients");

  auto* ve = app.add_subcommand("verify", "run the invariant suites");
  add_common(ve);
  ve->add_option("--only", "restrict to one suite");
  ve->add_option("--zeta-fault",
                 "fault-injection test hook: offset added to zeta; breaks "
                 "tridiagonality when nonzero");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    if (!config_path.empty()) cfg = load_config(config_path);

    const auto given = [&](const char* name) -> CLI::Option* {
      CLI::Option* opt = sub->get_option_no_throw(name);
      return (opt && opt->count() > 0) ? opt : nullptr;
    };
    const auto override_double = [&](const char* name, double& target) {
      if (CLI::Option* opt = given(name)) target = opt->as<double>();
    };
    override_double("--A", cfg.A);
    override_double("--omega", cfg.omega);
    override_double("--xi", cfg.xi);
    override_double("--lambda-c", cfg.lambda_c);
    override_double("--alpha", cfg.alpha);
    if (CLI::Option* o = given("--n-terms")) cfg.n_terms = o->as<int>();
    if (CLI::Option* o = given("--energy")) cfg.energy = o->as<double>();
    if (CLI::Option* o = given("--bound-n")) cfg.bound_n = o->as<int>();
    if (CLI::Option* o = given("--branch")) cfg.branch = o->as<std::string>();
    if (CLI::Option* o = given("--grid")) cfg.grid = o->as<std::string>();
    if (CLI::Option* o = given("--output")) cfg.output = o->as<std::string>();
    if (CLI::Option* o = given("--only")) cfg.only = o->as<std::string>();
    if (CLI::Option* o = given("--zeta-fault")) cfg.zeta_fault = o->as<double>();
    if (CLI::Option* o = given("--format"))
      cfg.format = o->as<std::string>() == "json" ? OutputFormat::json
                                                  : OutputFormat::csv;

    cfg.model();  // validate early with precise messages

    if (sub == sp) return cmd_spectrum(cfg, std::cout, std::cerr);
    if (sub == wf) return cmd_wavefunction(cfg, std::cout, std::cerr);
    if (sub == co) return cmd_coefficients(cfg, std::cout, std::cerr);
    return cmd_verify(cfg, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace dmorse::cli
