// Command-line front end: coefficient tables, kernel evaluation, single
// checks and the full verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wbi/errors.hpp"
#include "wbi/kernels.hpp"
#include "wbi/lambda_poly.hpp"
#include "wbi/oracle.hpp"
#include "wbi/report.hpp"
#include "wbi/verify.hpp"

namespace {

using namespace wbi;

constexpr const char* kConfigEnv = "WBI_CONFIG";

struct Common {
  unsigned n = 0;
  double k = 0.0;
  std::vector<double> x_grid;
  std::optional<double> tol;
  std::string format = "json";
  std::string out;
  std::string config;
  bool oracle = false;
};

EvalConfig resolve_config(const Common& c) {
  if (!c.config.empty()) return load_config(c.config);
  if (const char* env = std::getenv(kConfigEnv); env && *env) return load_config(env);
  return {};
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + out + "' for writing");
  f << text;
  if (!f.flush()) throw IoError("write to '" + out + "' failed");
}

Complex parse_complex(const std::string& s) {
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char sep = 0;
  if (!(in >> re)) throw DomainError("cannot parse complex value '" + s + "' (expected re or re,im)");
  if (in >> sep) {
    if (sep != ',' || !(in >> im)) throw DomainError("cannot parse complex value '" + s + "' (expected re or re,im)");
  }
  return {re, im};
}

void add_common(CLI::App* cmd, Common& c, bool grid) {
  cmd->add_option("--n", c.n, "polynomial index n")->check(CLI::Range(0u, kMaxDegreeIndex));
  cmd->add_option("--k", c.k, "imaginary part of the Whittaker order")->check(CLI::NonNegativeNumber);
  if (grid) cmd->add_option("--x-grid", c.x_grid, "comma-separated evaluation points")->delimiter(',');
  cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", c.out, "output file (default stdout)");
  cmd->add_option("--config", c.config, std::string("EvalConfig JSON (default: $") + kConfigEnv + ")");
}

// ---------------------------------------------------------------- coeffs

int run_coeffs(const Common& c, const std::string& convention_name) {
  const OrderParams p{c.n, c.k};
  const EvalConfig cfg = resolve_config(c);
  CoeffVector cv;
  if (convention_name == "resolved")
    cv = coeffs_from_recurrence(p);
  else if (convention_name == "printed")
    cv = {p, Convention::AsPrinted, iterate_first_order(p, boundary_coeffs(p, Convention::AsPrinted).a1)};
  else if (convention_name == "laguerre")
    cv = laguerre_closed_form(p.n);
  else
    cv = collocation_oracle(p, default_collocation_points(p.n), cfg).coeffs;

  if (parse_format(c.format) == ExportFormat::Json) {
    emit(dump_json(to_json(cv)), c.out);
  } else {
    std::ostringstream s;
    s << "m,re,im\n";
    for (std::size_t m = 0; m < cv.a.size(); ++m)
      s << m + 1 << ',' << format_number(cv.a[m].real()) << ',' << format_number(cv.a[m].imag()) << '\n';
    emit(s.str(), c.out);
  }
  return 0;
}

// ------------------------------------------------------------------ eval

struct EvalArgs {
  std::string kernel;
  std::string a, b, kappa, mu, nu;
  double z_imag = 0.0;
};

Complex eval_kernel(const EvalArgs& e, const Common& c, const EvalConfig& cfg, double x) {
  const Complex kappa = e.kappa.empty() ? Complex(c.n + 0.5) : parse_complex(e.kappa);
  const Complex mu = e.mu.empty() ? Complex(0.0, c.k) : parse_complex(e.mu);
  const Complex nu = e.nu.empty() ? Complex(0.5, c.k) : parse_complex(e.nu);
  const Complex z{x, e.z_imag};
  const std::string& k = e.kernel;
  if (k == "lambda") return coeffs_from_recurrence({c.n, c.k}).big_lambda()(x);
  if (c.oracle) {
    if (k == "log_gamma") return oracle::log_gamma(z);
    if (k == "gamma") return std::exp(oracle::log_gamma(z));
    if (k == "kummer_m") return oracle::kummer_m(parse_complex(e.a), parse_complex(e.b), z);
    if (k == "whittaker_m") return oracle::whittaker_m(kappa, mu, x);
    if (k == "whittaker_w") return oracle::whittaker_w(kappa, mu, x);
    if (k == "bessel_i") return oracle::bessel_i(nu, x);
    if (k == "bessel_i_tilde") return oracle::bessel_i(nu, x) + oracle::bessel_i(-nu, x);
    if (k == "bessel_k" || k == "bessel_k_quad") return oracle::bessel_k(nu, x);
  } else {
    if (k == "log_gamma") return log_gamma(z);
    if (k == "gamma") return gamma(z);
    if (k == "kummer_m") return kummer_m(parse_complex(e.a), parse_complex(e.b), z, cfg);
    if (k == "whittaker_m") return whittaker_m(kappa, mu, x, cfg);
    if (k == "whittaker_w") return whittaker_w(kappa, mu, x, cfg);
    if (k == "bessel_i") return bessel_i(nu, x, cfg);
    if (k == "bessel_i_tilde") return bessel_i_tilde(nu, x, cfg);
    if (k == "bessel_k") return bessel_k_via_w(nu, x, cfg);
    if (k == "bessel_k_quad") return bessel_k_quad(nu, x, cfg);
  }
  throw DomainError("unknown kernel '" + k + "'");
}

int run_eval(const EvalArgs& e, const Common& c) {
  const EvalConfig cfg = resolve_config(c);
  if ((e.kernel == "kummer_m") && (e.a.empty() || e.b.empty()))
    throw DomainError("kummer_m needs --a and --b");
  const std::vector<double> xs = c.x_grid.empty() ? std::vector<double>{1.0} : c.x_grid;
  std::vector<Complex> values;
  for (double x : xs) values.push_back(eval_kernel(e, c, cfg, x));

  if (parse_format(c.format) == ExportFormat::Json) {
    nlohmann::json vals = nlohmann::json::array();
    for (std::size_t i = 0; i < xs.size(); ++i)
      vals.push_back({{"x", xs[i]}, {"re", values[i].real()}, {"im", values[i].imag()}});
    nlohmann::json j{{"kernel", e.kernel}, {"params", {{"n", c.n}, {"k", c.k}}}, {"oracle", c.oracle},
                     {"values", std::move(vals)}};
    if (!e.a.empty()) j["a"] = e.a;
    if (!e.b.empty()) j["b"] = e.b;
    if (!e.kappa.empty()) j["kappa"] = e.kappa;
    if (!e.mu.empty()) j["mu"] = e.mu;
    if (!e.nu.empty()) j["nu"] = e.nu;
    emit(dump_json(j), c.out);
  } else {
    std::ostringstream s;
    s << "kernel,x,re,im\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
      s << e.kernel << ',' << format_number(xs[i]) << ',' << format_number(values[i].real()) << ','
        << format_number(values[i].imag()) << '\n';
    emit(s.str(), c.out);
  }
  return 0;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& check, const Common& c) {
  const EvalConfig cfg = resolve_config(c);
  const OrderParams p{c.n, c.k};
  ResidualReport r = (c.oracle && check == "identity.grid")
                         ? verify_identity_oracle(p, c.x_grid.empty() ? default_identity_grid() : c.x_grid)
                         : run_check(check, p, cfg, c.x_grid);
  if (c.tol) {
    r.threshold = *c.tol;
    r.finalize();
  }
  emit(render_reports({r}, parse_format(c.format)), c.out);
  return (r.pass || is_advisory(r.check)) ? 0 : 1;
}

// ----------------------------------------------------------------- suite

int run_suite_cmd(const Common& c, unsigned n_max, const std::vector<double>& k_set, bool no_oracle,
                  unsigned threads) {
  const EvalConfig cfg = resolve_config(c);
  SuiteRanges ranges;
  ranges.n_max = n_max;
  if (!k_set.empty()) ranges.k_set = k_set;
  if (!c.x_grid.empty()) ranges.x_grid = c.x_grid;
  ranges.oracle_equivalence = !no_oracle;
  ranges.threads = threads;
  const auto result = run_suite(cfg, ranges);
  emit(render_suite(result, parse_format(c.format)), c.out);
  if (!c.out.empty()) {
    const auto s = result.summary();
    std::cerr << "reports " << s.total << ", passed " << s.passed << ", advisory failures "
              << s.advisory_failed << ", load-bearing failures " << s.load_bearing_failed << '\n';
  }
  return result.pass() ? 0 : 1;
}

void print_error(const char* kind, const std::string& message) {
  nlohmann::json j{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whittaker-Bessel identity verification"};
  app.require_subcommand(1);

  Common common;

  std::string convention = "resolved";
  auto* coeffs = app.add_subcommand("coeffs", "print the coefficients a_1 .. a_{n+1}");
  add_common(coeffs, common, false);
  coeffs->add_option("--convention", convention, "resolved, printed, laguerre or collocation")
      ->check(CLI::IsMember({"resolved", "printed", "laguerre", "collocation"}));

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate a kernel on a grid of real arguments");
  add_common(eval, common, true);
  eval->add_option("--kernel", eval_args.kernel, "kernel name")
      ->required()
      ->check(CLI::IsMember({"log_gamma", "gamma", "kummer_m", "whittaker_m", "whittaker_w", "bessel_i",
                             "bessel_i_tilde", "bessel_k", "bessel_k_quad", "lambda"}));
  eval->add_option("--a", eval_args.a, "Kummer a as re[,im]");
  eval->add_option("--b", eval_args.b, "Kummer b as re[,im]");
  eval->add_option("--kappa", eval_args.kappa, "Whittaker kappa as re[,im] (default n + 1/2)");
  eval->add_option("--mu", eval_args.mu, "Whittaker mu as re[,im] (default ik)");
  eval->add_option("--nu", eval_args.nu, "Bessel order as re[,im] (default 1/2 + ik)");
  eval->add_option("--z-imag", eval_args.z_imag, "imaginary part added to x for gamma, log_gamma, kummer_m");
  eval->add_flag("--oracle", common.oracle, "50-digit evaluation");

  std::string check = "identity.grid";
  auto* verify = app.add_subcommand("verify", "run a single check for one (n, k)");
  add_common(verify, common, true);
  std::vector<std::string> names;
  for (auto v : check_names()) names.emplace_back(v);
  verify->add_option("--check", check, "check name")->check(CLI::IsMember(names));
  verify->add_option("--tol", common.tol, "override the pass threshold");
  verify->add_flag("--oracle", common.oracle, "50-digit identity evaluation (any x > 0)");

  unsigned n_max = 8, threads = 0;
  std::vector<double> k_set;
  bool no_oracle = false;
  auto* suite = app.add_subcommand("suite", "run every check over a range of (n, k)");
  add_common(suite, common, true);
  suite->add_option("--n-max", n_max, "largest n")->check(CLI::Range(0u, kMaxDegreeIndex));
  suite->add_option("--k-set", k_set, "comma-separated k values")->delimiter(',');
  suite->add_option("--threads", threads, "worker threads (0: hardware concurrency)");
  suite->add_flag("--no-oracle", no_oracle, "skip the collocation oracle-equivalence checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  }

  try {
    if (*coeffs) return run_coeffs(common, convention);
    if (*eval) return run_eval(eval_args, common);
    if (*verify) return run_verify(check, common);
    if (*suite) return run_suite_cmd(common, n_max, k_set, no_oracle, threads);
  } catch (const wbi::Error& e) {
    print_error(e.kind(), e.what());
    return 2;
  } catch (const nlohmann::json::exception& e) {
    print_error("config", e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 2;
  }
  return 0;
}
