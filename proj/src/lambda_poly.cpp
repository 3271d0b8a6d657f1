#include "wbi/lambda_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "wbi/errors.hpp"
#include "wbi/oracle.hpp"

namespace wbi {

std::string_view to_string(Convention c) noexcept {
  switch (c) {
    case Convention::Resolved: return "recurrence:a1=(-1)^n(1-ik)_n/sqrt(pi)";
    case Convention::AsPrinted: return "recurrence:a1=(-1)^n(1+ik)_n/sqrt(pi)";
    case Convention::Laguerre: return "laguerre_closed_form";
    case Convention::Collocation: return "collocation_oracle";
  }
  return "unknown";
}

PolyC CoeffVector::lambda() const {
  std::vector<Complex> c(a.size() + 1);
  std::copy(a.begin(), a.end(), c.begin() + 1);
  return PolyC(std::move(c));
}

PolyC CoeffVector::big_lambda() const { return PolyC(a); }

BoundaryCoeffs boundary_coeffs(const OrderParams& p, Convention c) {
  p.validate();
  const double sign = (p.n % 2 == 0) ? 1.0 : -1.0;
  const Complex start = (c == Convention::AsPrinted) ? Complex{1.0, p.k} : Complex{1.0, -p.k};
  return {sign * pochhammer(start, p.n) / kSqrtPi, std::ldexp(1.0, int(p.n)) / kSqrtPi};
}

namespace {

using oracle::HpComplex;
using oracle::HpReal;

// Leading coefficients are ~n! while a_{n+1} = 2^n/sqrt(pi); the cancellation needs the extra digits.
std::vector<Complex> iterate_hp(const OrderParams& p, HpComplex a1) {
  std::vector<Complex> a(p.n + 1);
  const HpReal two_n_plus_one = 2 * HpReal(p.n) + 1;
  const HpReal k(p.k);
  HpComplex am = a1;
  a[0] = oracle::to_double(am);
  for (unsigned m = 1; m <= p.n; ++m) {
    const HpComplex denom = HpReal(m) * HpComplex(HpReal(m), -2 * k);
    am = -(two_n_plus_one * am + (1 - 2 * HpReal(m)) * conj(am)) / denom;
    a[m] = oracle::to_double(am);
  }
  return a;
}

HpComplex hp_a1(const OrderParams& p, Convention c) {
  const HpReal k(p.k);
  const HpComplex start(HpReal(1), c == Convention::AsPrinted ? k : HpReal(-k));
  HpComplex prod(1);
  for (unsigned j = 0; j < p.n; ++j) prod *= start + HpReal(j);
  if (p.n % 2 == 1) prod = -prod;
  return prod / sqrt(boost::math::constants::pi<HpReal>());
}

double top_deviation(const OrderParams& p, Complex a_top) {
  const double want = std::ldexp(1.0, int(p.n)) / kSqrtPi;
  return std::abs(a_top - want) / want;
}

constexpr double kTopCoefficientTol = 1e-10;

}  // namespace

std::vector<Complex> iterate_first_order(const OrderParams& p, Complex a1) {
  p.validate();
  return iterate_hp(p, oracle::to_hp(a1));
}

CoeffVector coeffs_from_recurrence(const OrderParams& p, Convention c) {
  if (c != Convention::Resolved && c != Convention::AsPrinted)
    throw DomainError("coeffs_from_recurrence: convention must be Resolved or AsPrinted");
  p.validate();
  CoeffVector cv{p, c, iterate_hp(p, hp_a1(p, c))};
  const double dev = top_deviation(p, cv.a.back());
  if (!(dev <= kTopCoefficientTol)) {
    std::ostringstream msg;
    msg << "coeffs_from_recurrence: a_{n+1} = " << cv.a.back() << " deviates from 2^n/sqrt(pi) by "
        << dev << " (n = " << p.n << ", k = " << p.k << ", " << to_string(c) << ")";
    throw InvariantViolation(msg.str());
  }
  return cv;
}

std::vector<ConventionOutcome> resolve_convention(const OrderParams& p) {
  std::vector<ConventionOutcome> out;
  for (Convention c : {Convention::Resolved, Convention::AsPrinted}) {
    p.validate();
    const auto a = iterate_hp(p, hp_a1(p, c));
    const double dev = top_deviation(p, a.back());
    out.push_back({c, a.back(), dev, dev <= kTopCoefficientTol});
  }
  return out;
}

ResidualReport check_second_order(const CoeffVector& cv) {
  ResidualReport r;
  r.check = "coeffs.second_order_recurrence";
  r.params = cv.params;
  r.threshold = 1e-10;
  const unsigned n = cv.params.n;
  const Complex ik{0.0, cv.params.k};
  for (unsigned m = 1; m + 1 <= n; ++m) {
    const double md = m;
    const Complex t2 = md * (md + 1) * (2 * md - 1) * (md + 2.0 * ik) * (md - 1 - 2.0 * ik) * cv.coeff(m + 2);
    const Complex t1 = (1.0 + 2.0 * n) * md * (3 * md * md + md - 2.0 * ik) * cv.coeff(m + 1);
    const Complex t0 = -4.0 * (1 + 2 * md) * (n + md) * (1.0 + n - md) * cv.coeff(m);
    const double scale = std::max({std::abs(t0), std::abs(t1), std::abs(t2)});
    r.add(md, scale == 0.0 ? 0.0 : std::abs(t0 + t1 + t2) / scale);
  }
  return r.finalize();
}

CoeffVector laguerre_closed_form(unsigned n) {
  OrderParams p{n, 0.0};
  p.validate();
  // L_n(2x) = sum_j (-1)^j C(n, j) 2^j x^j / j!
  const double lead = ((n % 2 == 0) ? 1.0 : -1.0) * std::tgamma(n + 1.0) / kSqrtPi;
  std::vector<Complex> a(n + 1);
  double c = 1.0;
  for (unsigned j = 0; j <= n; ++j) {
    a[j] = lead * ((j % 2 == 0) ? c : -c);
    c *= 2.0 * double(n - j) / (double(j + 1) * double(j + 1));
  }
  return {p, Convention::Laguerre, std::move(a)};
}

std::vector<double> default_collocation_points(unsigned n) {
  const unsigned count = 4 * (n + 1);
  std::vector<double> xs(count);
  for (unsigned j = 0; j < count; ++j) {
    const double t = 0.5 * (1.0 - std::cos(kPi * (j + 0.5) / count));
    xs[j] = 0.25 + (6.0 - 0.25) * t;
  }
  return xs;
}

CollocationFit collocation_oracle(const OrderParams& p, std::span<const double> xs, const EvalConfig& cfg) {
  using oracle::HpComplex;
  using oracle::HpReal;
  using HpMatrix = Eigen::Matrix<HpReal, Eigen::Dynamic, Eigen::Dynamic>;
  using HpVector = Eigen::Matrix<HpReal, Eigen::Dynamic, 1>;

  p.validate();
  if (p.k == 0.0) throw DomainError("collocation_oracle: k = 0 is handled by the Laguerre closed form");
  const std::size_t unknowns = 2 * (p.n + 1);
  if (xs.size() < unknowns)
    throw DomainError("collocation_oracle: need at least 2(n+1) sample points");
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0.25 || sorted.back() > 6.0)
    throw DomainError("collocation_oracle: sample points must lie in [0.25, 6]");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("collocation_oracle: sample points must be distinct");

  const HpComplex nu(HpReal(0.5), HpReal(p.k));
  const HpComplex kappa(HpReal(p.n) + HpReal(0.5), HpReal(0));
  const HpComplex mu(HpReal(0), HpReal(p.k));

  HpMatrix design(xs.size(), unknowns);
  HpVector rhs(xs.size());
  for (std::size_t row = 0; row < xs.size(); ++row) {
    const HpReal x(xs[row]);
    const HpComplex kv = oracle::bessel_k(nu, x);
    const HpReal w = oracle::whittaker_w(kappa, mu, 2 * x).real();
    // Weight rows to relative residuals.
    const HpReal weight = (w == 0) ? HpReal(1) : HpReal(1) / abs(w);
    HpComplex xm = x * kv;
    for (unsigned m = 0; m <= p.n; ++m) {
      design(row, 2 * m) = 2 * xm.real() * weight;
      design(row, 2 * m + 1) = -2 * xm.imag() * weight;
      xm *= x;
    }
    rhs(row) = w * weight;
  }

  HpVector scale(unknowns);
  for (std::size_t c = 0; c < unknowns; ++c) {
    scale(c) = design.col(c).norm();
    if (scale(c) == 0) throw IllConditionedError("collocation_oracle: zero design column");
    design.col(c) /= scale(c);
  }

  Eigen::JacobiSVD<HpMatrix> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const HpReal smin = sv(sv.size() - 1);
  const double condition = smin == 0 ? std::numeric_limits<double>::infinity()
                                     : static_cast<double>(sv(0) / smin);
  if (!(condition <= cfg.collocation_cond_limit)) {
    std::ostringstream msg;
    msg << "collocation_oracle: design matrix condition " << condition << " exceeds "
        << cfg.collocation_cond_limit << "; choose better sample points";
    throw IllConditionedError(msg.str());
  }
  const HpVector scaled = svd.solve(rhs);
  const double residual = static_cast<double>((design * scaled - rhs).norm() / rhs.norm());

  CoeffVector cv{p, Convention::Collocation, std::vector<Complex>(p.n + 1)};
  for (unsigned m = 0; m <= p.n; ++m) {
    cv.a[m] = {static_cast<double>(scaled(2 * m) / scale(2 * m)),
               static_cast<double>(scaled(2 * m + 1) / scale(2 * m + 1))};
  }
  if (!(residual <= cfg.collocation_residual_tol)) {
    std::ostringstream msg;
    msg << "collocation_oracle: least-squares residual " << residual << " exceeds "
        << cfg.collocation_residual_tol;
    throw InvariantViolation(msg.str());
  }
  return {std::move(cv), condition, residual};
}

nlohmann::json to_json(const CoeffVector& cv) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : cv.a) a.push_back({c.real(), c.imag()});
  return {{"n", cv.params.n}, {"k", cv.params.k}, {"convention", to_string(cv.convention)}, {"a", a}};
}

double max_relative_difference(const CoeffVector& a, const CoeffVector& b) {
  if (a.a.size() != b.a.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    const double scale = std::abs(b.a[i]);
    const double diff = std::abs(a.a[i] - b.a[i]);
    worst = std::max(worst, scale == 0.0 ? diff : diff / scale);
  }
  return worst;
}

}  // namespace wbi
