#include "wbi/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include <boost/math/constants/constants.hpp>

#include "wbi/errors.hpp"
#include "wbi/kernels.hpp"
#include "wbi/lambda_poly.hpp"
#include "wbi/ode_suite.hpp"
#include "wbi/oracle.hpp"

namespace wbi {

namespace {

double k_half_closed_form(double x) { return std::sqrt(kPi / (2 * x)) * std::exp(-x); }

std::string cell_label(const OrderParams& p) {
  std::ostringstream s;
  s << "n=" << p.n << " k=" << format_number(p.k);
  return s.str();
}

// 2x |K| sum |a_m| x^{m-1}: the right side with every term taken in absolute
// value. W is real and has zeros for x below ~2n, so |W| alone is no scale.
double identity_envelope(const CoeffVector& cv, double x, double abs_k) {
  double s = 0.0, xp = 1.0;
  for (const auto& a : cv.a) {
    s += std::abs(a) * xp;
    xp *= x;
  }
  return 2.0 * x * abs_k * s;
}

}  // namespace

std::vector<double> default_identity_grid() { return {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}; }

ResidualReport verify_identity(const OrderParams& p, const std::vector<double>& grid, const EvalConfig& cfg) {
  p.validate();
  for (double x : grid)
    if (!(x >= 0.25 && x <= 8.0)) {
      std::ostringstream msg;
      msg << "verify_identity: x = " << x << " outside [0.25, 8]; use the high-precision path";
      throw DomainError(msg.str());
    }
  ResidualReport r;
  r.check = "identity.grid";
  r.params = p;
  r.threshold = 1e-6;
  if (p.k <= cfg.k_zero_threshold) {
    const auto cv = coeffs_from_recurrence(p);
    const PolyC L = cv.big_lambda();
    for (double x : grid) {
      const double k_half = k_half_closed_form(x);
      const Complex lhs = whittaker_w(p.kappa(), 0.0, 2 * x, cfg);
      const Complex rhs = 2.0 * x * L(x).real() * k_half;
      r.add(x, std::abs(lhs - rhs) / std::max(std::abs(lhs), identity_envelope(cv, x, k_half)));
    }
    r.notes.push_back("k = 0: Laguerre form of W and closed-form K_{1/2}");
    return r.finalize();
  }
  if (p.k < cfg.small_k_refusal) {
    std::ostringstream msg;
    msg << "verify_identity: 0 < k = " << p.k << " < " << cfg.small_k_refusal
        << " is refused in double precision (gamma cancellation); use k = 0 or the high-precision path";
    throw DomainError(msg.str());
  }
  const auto cv = coeffs_from_recurrence(p);
  const PolyC L = cv.big_lambda();
  const Complex nu_plus{0.5, p.k}, nu_minus{0.5, -p.k};
  for (double x : grid) {
    const Complex lhs = whittaker_w(p.kappa(), p.mu(), 2 * x, cfg);
    const Complex lam = L(x);
    const Complex kp = bessel_k_quad(nu_plus, x, cfg);
    const Complex rhs = x * lam * kp + x * std::conj(lam) * bessel_k_quad(nu_minus, x, cfg);
    r.add(x, std::abs(lhs - rhs) / std::max(std::abs(lhs), identity_envelope(cv, x, std::abs(kp))));
  }
  return r.finalize();
}

ResidualReport verify_identity_oracle(const OrderParams& p, const std::vector<double>& grid) {
  using oracle::HpComplex;
  using oracle::HpReal;
  p.validate();
  const auto cv = coeffs_from_recurrence(p);
  std::vector<HpComplex> a;
  for (const auto& c : cv.a) a.push_back(oracle::to_hp(c));
  ResidualReport r;
  r.check = "identity.grid_oracle";
  r.params = p;
  r.threshold = 1e-6;
  const HpReal k(p.k);
  const HpReal pi = boost::math::constants::pi<HpReal>();
  for (double xd : grid) {
    if (!(xd > 0.0)) throw DomainError("verify_identity_oracle: grid points must be positive");
    const HpReal x(xd);
    HpComplex lam(0);
    for (std::size_t m = a.size(); m-- > 0;) lam = lam * x + a[m];
    HpComplex lhs, rhs;
    if (p.k == 0.0) {
      // (-1)^n n! sqrt(2x) e^{-x} L_n(2x), L_n by its three-term recurrence.
      HpReal l0(1), l1 = 1 - 2 * x;
      if (p.n == 0) l1 = l0;
      for (unsigned j = 1; j < p.n; ++j) {
        const HpReal l2 = ((2 * j + 1 - 2 * x) * l1 - j * l0) / (j + 1);
        l0 = l1;
        l1 = l2;
      }
      HpReal fact(1);
      for (unsigned j = 2; j <= p.n; ++j) fact *= j;
      lhs = HpComplex((p.n % 2 ? -fact : fact) * sqrt(2 * x) * exp(-x) * l1);
      rhs = HpComplex(2 * x * lam.real() * sqrt(pi / (2 * x)) * exp(-x));
    } else {
      lhs = oracle::whittaker_w(HpComplex(HpReal(p.kappa())), HpComplex(HpReal(0), k), 2 * x);
      const HpComplex kp = oracle::bessel_k(HpComplex(HpReal(0.5), k), x);
      const HpComplex km = oracle::bessel_k(HpComplex(HpReal(0.5), -k), x);
      rhs = x * lam * kp + x * conj(lam) * km;
    }
    HpReal env(0), xp(1);
    for (const auto& c : a) {
      env += abs(c) * xp;
      xp *= x;
    }
    env *= 2 * x * (p.k == 0.0 ? sqrt(pi / (2 * x)) * exp(-x) : HpReal(abs(oracle::bessel_k(HpComplex(HpReal(0.5), k), x))));
    r.add(xd, static_cast<double>(abs(lhs - rhs) / (abs(lhs) > env ? HpReal(abs(lhs)) : env)));
  }
  return r.finalize();
}

void SuiteRanges::validate() const {
  if (n_max > kMaxDegreeIndex) {
    std::ostringstream msg;
    msg << "run_suite: n_max = " << n_max << " exceeds " << kMaxDegreeIndex;
    throw DomainError(msg.str());
  }
  if (k_set.empty()) throw DomainError("run_suite: empty k set");
  for (double k : k_set)
    if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("run_suite: k values must be finite and >= 0");
  if (x_grid.empty()) throw DomainError("run_suite: empty x grid");
}

const std::vector<AdvisoryEntry>& advisory_checks() {
  static const std::vector<AdvisoryEntry> table{
      {"coeffs.printed_a1_convention",
       "a_1 = (-1)^n (1+ik)_n/sqrt(pi) does not close on the real a_{n+1} = 2^n/sqrt(pi); (1-ik)_n is used"},
      {"coeffs.second_order_recurrence",
       "the printed second-order recurrence is not satisfied by the generated coefficients"},
      {"ode.printed_a3_constant",
       "with the printed constant term 2i(1-2k)(i+k)(i+4k) of a3 the product basis does not solve the "
       "equation; 2i(i-2k)(i+k)(i+4k) is used"},
      {"ode.indicial_printed_quadratic",
       "roots of s^2 - s - 4(1-k)(i+k) differ from the computed exponents {0, 1, 2ik, 1-2ik}"},
      {"constants.printed_closed_form",
       "printed c2, c3, c4 expressions do not satisfy the defining system; the system solution is used"},
      {"constants.printed_relations",
       "printed relations evaluated at the system solution (the second relation holds, the first and "
       "third do not)"},
  };
  return table;
}

bool is_advisory(std::string_view check) {
  const auto& t = advisory_checks();
  return std::any_of(t.begin(), t.end(), [&](const AdvisoryEntry& e) { return e.check == check; });
}

namespace {

std::vector<double> reconstruction_grid() { return {0.5, 1.0, 2.0, 4.0, 6.0}; }

std::vector<double> pick(const std::vector<double>& grid, std::vector<double> fallback) {
  return grid.empty() ? fallback : grid;
}

ResidualReport make_report(const char* check, const OrderParams& p, double threshold) {
  ResidualReport r;
  r.check = check;
  r.params = p;
  r.threshold = threshold;
  return r;
}

ResidualReport bessel_k_agreement(const OrderParams& p, const EvalConfig& cfg, const std::vector<double>& grid) {
  auto r = make_report("kernels.bessel_k_agreement", {0, p.k}, 1e-10);
  const Complex nu{0.5, p.k};
  for (double x : pick(grid, default_identity_grid())) {
    const Complex q = bessel_k_quad(nu, x, cfg);
    const Complex w = p.k > 0.0 ? bessel_k_via_w(nu, x, cfg) : Complex(k_half_closed_form(x));
    r.add(x, std::abs(q - w) / std::abs(w));
  }
  if (p.k == 0.0) r.notes.push_back("k = 0: quadrature against sqrt(pi/2x) e^{-x}");
  return r.finalize();
}

ResidualReport whittaker_w_realness(const OrderParams& p, const EvalConfig& cfg, const std::vector<double>& grid) {
  auto r = make_report("kernels.whittaker_w_realness", p, 1e-10);
  const auto cv = coeffs_from_recurrence(p);
  const Complex nu{0.5, p.k};
  for (double x : pick(grid, default_identity_grid())) {
    const Complex w = whittaker_w(p.kappa(), p.mu(), 2 * x, cfg);
    const double abs_k = p.k > 0.0 ? std::abs(bessel_k_via_w(nu, x, cfg)) : k_half_closed_form(x);
    r.add(x, std::abs(w.imag()) / std::max(std::abs(w), identity_envelope(cv, x, abs_k)));
  }
  return r.finalize();
}

ResidualReport top_coefficient(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  auto r = make_report("coeffs.top_coefficient", p, 1e-12);
  const Complex top = coeffs_from_recurrence(p).a.back();
  const double want = std::ldexp(1.0, int(p.n)) / kSqrtPi;
  r.add(p.n + 1, std::max(std::abs(top - want), std::abs(top.imag())) / want);
  return r.finalize();
}

ResidualReport first_order_recurrence(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  const auto cv = coeffs_from_recurrence(p);
  const Complex ik{0.0, p.k};
  auto r = make_report("coeffs.first_order_recurrence", p, 1e-12);
  for (unsigned m = 1; m <= p.n; ++m) {
    const double md = m;
    const Complex t2 = md * (md - 2.0 * ik) * cv.coeff(m + 1);
    const Complex t1 = (1.0 + 2.0 * p.n) * cv.coeff(m);
    const Complex t0 = (1.0 - 2.0 * md) * std::conj(cv.coeff(m));
    const double scale = std::max({std::abs(t0), std::abs(t1), std::abs(t2)});
    r.add(md, std::abs(t0 + t1 + t2) / scale);
  }
  return r.finalize();
}

ResidualReport degree(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  const auto cv = coeffs_from_recurrence(p);
  auto r = make_report("coeffs.degree", p, 0.0);
  const bool ok = cv.lambda().degree() == int(p.n + 1) && cv.lambda()[0] == Complex{} &&
                  cv.big_lambda().degree() == int(p.n);
  r.add(p.n, ok ? 0.0 : 1.0);
  return r.finalize();
}

ResidualReport printed_a1(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  auto r = make_report("coeffs.printed_a1_convention", p, 1e-10);
  for (const auto& o : resolve_convention(p))
    if (o.convention == Convention::AsPrinted) r.add(p.n + 1, o.top_deviation);
  return r.finalize();
}

ResidualReport second_order(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  return check_second_order(coeffs_from_recurrence(p));
}

ResidualReport laguerre_reduction(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  const OrderParams p0{p.n, 0.0};
  const auto rec = coeffs_from_recurrence(p0);
  const auto lag = laguerre_closed_form(p.n);
  auto r = make_report("coeffs.laguerre_reduction", p0, 1e-12);
  for (unsigned m = 1; m <= p.n + 1; ++m)
    r.add(m, std::abs(rec.coeff(m) - lag.coeff(m)) / std::abs(lag.coeff(m)));
  return r.finalize();
}

ResidualReport collocation_equivalence(const OrderParams& p, const EvalConfig& cfg,
                                       const std::vector<double>& grid) {
  const auto fit = collocation_oracle(p, pick(grid, default_collocation_points(p.n)), cfg);
  const auto rec = coeffs_from_recurrence(p);
  auto r = make_report("oracle.collocation_equivalence", p, 1e-8);
  for (unsigned m = 1; m <= p.n + 1; ++m)
    r.add(m, std::abs(fit.coeffs.coeff(m) - rec.coeff(m)) / std::abs(rec.coeff(m)));
  r.detail["condition"] = {fit.condition};
  r.detail["fit_residual"] = {fit.residual};
  return r.finalize();
}

ResidualReport coupled(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  return coupled_residual(coeffs_from_recurrence(p));
}

ResidualReport identity(const OrderParams& p, const EvalConfig& cfg, const std::vector<double>& grid) {
  return verify_identity(p, pick(grid, default_identity_grid()), cfg);
}

ResidualReport products(const OrderParams& p, const EvalConfig& cfg, const std::vector<double>& grid) {
  return product_solution_check(p, pick(grid, default_ode4_grid()), cfg);
}

ResidualReport control(const OrderParams& p, const EvalConfig& cfg, const std::vector<double>& grid) {
  return ode4_control_check(p, pick(grid, default_ode4_grid()), cfg);
}

ResidualReport trial(const OrderParams& p, const EvalConfig& cfg, const std::vector<double>& grid) {
  return trial_condition_check(p, pick(grid, default_ode4_grid()), cfg);
}

ResidualReport printed_a3(const OrderParams& p, const EvalConfig& cfg, const std::vector<double>& grid) {
  const auto ode = ode4_coeffs_printed(p);
  const auto basis = product_basis(p, cfg);
  auto r = make_report("ode.printed_a3_constant", p, 1e-4);
  for (double x : pick(grid, default_ode4_grid())) {
    double worst = 0.0;
    for (const auto& f : basis.f) worst = std::max(worst, std::abs(ode4_residual(f, ode, x, cfg)));
    r.add(x, worst);
  }
  return r.finalize();
}

void append_roots(ResidualReport& r, const char* key, const std::vector<Complex>& roots) {
  auto& v = r.detail[key];
  for (const auto& z : roots) v.insert(v.end(), {z.real(), z.imag()});
}

ResidualReport indicial(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  const auto ind = indicial_analysis(p);
  auto r = make_report("ode.indicial_exponents", p, 1e-10);
  r.add(0.0, ind.deviation);
  append_roots(r, "roots_re_im", ind.roots);
  return r.finalize();
}

ResidualReport indicial_printed(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  const auto ind = indicial_analysis(p);
  auto r = make_report("ode.indicial_printed_quadratic", p, 1e-10);
  r.add(0.0, ind.printed_deviation);
  append_roots(r, "roots_re_im", ind.roots);
  append_roots(r, "printed_roots_re_im", ind.printed_roots);
  return r.finalize();
}

ResidualReport three_rows(const char* check, const OrderParams& p, const std::array<double, 3>& res) {
  auto r = make_report(check, p, 1e-10);
  for (int i = 0; i < 3; ++i) r.add(i + 1, res[i]);
  return r.finalize();
}

ResidualReport constants_system(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  const auto outcome = constants_closed_form(p);
  auto r = three_rows("constants.linear_system", p, linear_system_residuals(p, outcome.constants));
  const auto& c = outcome.constants;
  auto& v = r.detail["c1_c4_re_im"];
  for (Complex z : {c.c1, c.c2, c.c3, c.c4}) v.insert(v.end(), {z.real(), z.imag()});
  r.notes = outcome.notes;
  return r;
}

ResidualReport constants_printed_form(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  return three_rows("constants.printed_closed_form", p, linear_system_residuals(p, constants_printed(p)));
}

ResidualReport constants_printed_rel(const OrderParams& p, const EvalConfig&, const std::vector<double>&) {
  return three_rows("constants.printed_relations", p, printed_relation_residuals(p, constants_linear_system(p)));
}

ResidualReport reconstruction(const OrderParams& p, const EvalConfig& cfg, const std::vector<double>& grid) {
  return lambda_reconstruction(p, pick(grid, reconstruction_grid()), cfg);
}

enum Scope : unsigned {
  kAnyK = 0,
  kPositiveK = 1,   // needs k > 0
  kOncePerK = 2,    // only in the n = 0 cell
  kOncePerN = 4,    // only in the first k cell of each n
  kOracle = 8,      // only with SuiteRanges::oracle_equivalence
};

struct CheckEntry {
  std::string_view name;
  unsigned scope;
  ResidualReport (*fn)(const OrderParams&, const EvalConfig&, const std::vector<double>&);
};

// Suite order: kernels, coefficients, oracle, coupled equation, identity,
// fourth-order basis, indicial exponents, constants and reconstruction.
const std::vector<CheckEntry>& check_table() {
  static const std::vector<CheckEntry> table{
      {"kernels.bessel_k_agreement", kOncePerK, bessel_k_agreement},
      {"kernels.whittaker_w_realness", kAnyK, whittaker_w_realness},
      {"coeffs.top_coefficient", kAnyK, top_coefficient},
      {"coeffs.first_order_recurrence", kAnyK, first_order_recurrence},
      {"coeffs.degree", kAnyK, degree},
      {"coeffs.printed_a1_convention", kAnyK, printed_a1},
      {"coeffs.second_order_recurrence", kAnyK, second_order},
      {"coeffs.laguerre_reduction", kOncePerN, laguerre_reduction},
      {"oracle.collocation_equivalence", kPositiveK | kOracle, collocation_equivalence},
      {"ode.coupled_residual", kAnyK, coupled},
      {"identity.grid", kAnyK, identity},
      {"ode.product_solutions", kPositiveK, products},
      {"ode.control_non_solution", kPositiveK, control},
      {"ode.trial_conditions", kPositiveK, trial},
      {"ode.printed_a3_constant", kPositiveK, printed_a3},
      {"ode.indicial_exponents", kPositiveK, indicial},
      {"ode.indicial_printed_quadratic", kPositiveK, indicial_printed},
      {"constants.linear_system", kPositiveK, constants_system},
      {"constants.printed_closed_form", kPositiveK, constants_printed_form},
      {"constants.printed_relations", kPositiveK, constants_printed_rel},
      {"ode.lambda_reconstruction", kAnyK, reconstruction},
  };
  return table;
}

// Report parameters for a check run at p (some checks are k- or n-independent).
OrderParams report_params(const CheckEntry& e, const OrderParams& p) {
  if (e.scope & kOncePerK) return {0, p.k};
  if (e.scope & kOncePerN) return {p.n, 0.0};
  return p;
}

ResidualReport guarded(const CheckEntry& e, const OrderParams& p, const EvalConfig& cfg,
                       const std::vector<double>& grid) {
  try {
    return e.fn(p, cfg, grid);
  } catch (const ConvergenceError&) {
    throw;
  } catch (const Error& err) {
    ResidualReport r;
    r.check = std::string(e.name);
    r.params = report_params(e, p);
    r.pass = false;
    r.notes.push_back(std::string(err.kind()) + ": " + err.what());
    return r;
  }
}

std::vector<ResidualReport> run_cell(const OrderParams& p, bool first_k, const EvalConfig& cfg,
                                     const SuiteRanges& ranges) {
  std::vector<ResidualReport> out;
  for (const auto& e : check_table()) {
    if ((e.scope & kPositiveK) && !(p.k > 0.0)) continue;
    if ((e.scope & kOncePerK) && p.n != 0) continue;
    if ((e.scope & kOncePerN) && !first_k) continue;
    if ((e.scope & kOracle) && !ranges.oracle_equivalence) continue;
    const bool uses_identity_grid = e.name.rfind("kernels.", 0) == 0 || e.name == "identity.grid";
    out.push_back(guarded(e, p, cfg, uses_identity_grid ? ranges.x_grid : std::vector<double>{}));
  }
  return out;
}

std::vector<std::string> build_ledger(const std::vector<ResidualReport>& reports) {
  struct Tally {
    std::size_t failed = 0, total = 0;
    double worst = 0.0;
  };
  std::map<std::string, Tally> advisory;
  std::vector<std::string> ledger;
  for (const auto& r : reports) {
    if (is_advisory(r.check)) {
      auto& t = advisory[r.check];
      ++t.total;
      if (!r.pass) {
        ++t.failed;
        t.worst = std::max(t.worst, r.max_residual());
      }
    } else if (!r.pass) {
      std::string entry = r.check + " " + cell_label(r.params) + ": FAILED (load-bearing), max residual " +
                          format_number(r.max_residual()) + " > " + format_number(r.threshold);
      for (const auto& note : r.notes) entry += "; " + note;
      ledger.push_back(std::move(entry));
    }
  }
  for (const auto& e : advisory_checks()) {
    const auto it = advisory.find(std::string(e.check));
    if (it == advisory.end() || it->second.failed == 0) continue;
    std::ostringstream s;
    s << e.check << ": advisory, failed in " << it->second.failed << " of " << it->second.total
      << " cells (max residual " << format_number(it->second.worst) << "); " << e.reason;
    ledger.push_back(s.str());
  }
  return ledger;
}

}  // namespace

SuiteSummary VerificationSuiteResult::summary() const {
  SuiteSummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    if (r.pass) {
      ++s.passed;
      continue;
    }
    ++s.failed;
    if (is_advisory(r.check))
      ++s.advisory_failed;
    else
      ++s.load_bearing_failed;
  }
  return s;
}

bool VerificationSuiteResult::pass() const { return summary().load_bearing_failed == 0; }

VerificationSuiteResult run_suite(const EvalConfig& cfg, const SuiteRanges& ranges) {
  // Truncation limits are not pre-checked: a too-small limit surfaces as
  // ConvergenceError from the kernel that hits it.
  cfg.validate_tolerances();
  ranges.validate();
  std::vector<double> ks = ranges.k_set;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  struct Cell {
    OrderParams p;
    bool first_k;
  };
  std::vector<Cell> cells;
  for (unsigned n = 0; n <= ranges.n_max; ++n)
    for (std::size_t i = 0; i < ks.size(); ++i) cells.push_back({{n, ks[i]}, i == 0});

  std::vector<std::vector<ResidualReport>> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  auto worker = [&] {
    for (std::size_t i; !abort && (i = next++) < cells.size();) {
      try {
        results[i] = run_cell(cells[i].p, cells[i].first_k, cfg, ranges);
      } catch (...) {
        errors[i] = std::current_exception();
        abort = true;
      }
    }
  };
  unsigned nthreads = ranges.threads ? ranges.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, cells.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerificationSuiteResult out;
  out.ranges = ranges;
  for (auto& v : results)
    for (auto& r : v) out.reports.push_back(std::move(r));
  std::stable_sort(out.reports.begin(), out.reports.end(), [](const ResidualReport& a, const ResidualReport& b) {
    return std::tie(a.check, a.params.n, a.params.k) < std::tie(b.check, b.params.n, b.params.k);
  });
  out.ledger = build_ledger(out.reports);
  return out;
}

nlohmann::json to_json(const SuiteSummary& s) {
  return {{"total", s.total},
          {"passed", s.passed},
          {"failed", s.failed},
          {"advisory_failed", s.advisory_failed},
          {"load_bearing_failed", s.load_bearing_failed}};
}

nlohmann::json to_json(const VerificationSuiteResult& result) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : result.reports) {
    auto j = to_json(r);
    j["advisory"] = is_advisory(r.check);
    reports.push_back(std::move(j));
  }
  const auto& rg = result.ranges;
  return {{"ranges",
           {{"n_max", rg.n_max}, {"k_set", rg.k_set}, {"x_grid", rg.x_grid}, {"oracle_equivalence", rg.oracle_equivalence}}},
          {"summary", to_json(result.summary())},
          {"pass", result.pass()},
          {"ledger", result.ledger},
          {"reports", std::move(reports)}};
}

std::vector<std::string_view> check_names() {
  std::vector<std::string_view> out;
  for (const auto& e : check_table()) out.push_back(e.name);
  return out;
}

ResidualReport run_check(std::string_view name, const OrderParams& p, const EvalConfig& cfg,
                         const std::vector<double>& grid) {
  for (const auto& e : check_table())
    if (e.name == name) return e.fn(p, cfg, grid);
  throw DomainError("unknown check '" + std::string(name) + "'");
}

ExportFormat parse_format(std::string_view name) {
  if (name == "json") return ExportFormat::Json;
  if (name == "csv") return ExportFormat::Csv;
  throw DomainError("unknown format '" + std::string(name) + "' (expected json or csv)");
}

std::string render_reports(const std::vector<ResidualReport>& reports, ExportFormat format) {
  if (format == ExportFormat::Csv) {
    std::ostringstream s;
    write_csv(s, reports);
    return s.str();
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return dump_json({{"reports", std::move(arr)}});
}

std::string render_suite(const VerificationSuiteResult& result, ExportFormat format) {
  if (format == ExportFormat::Csv) return render_reports(result.reports, format);
  return dump_json(to_json(result));
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace

void export_reports(const std::vector<ResidualReport>& reports, ExportFormat format, const std::string& path) {
  write_file(path, render_reports(reports, format));
}

void export_suite(const VerificationSuiteResult& result, ExportFormat format, const std::string& path) {
  write_file(path, render_suite(result, format));
}

}  // namespace wbi
