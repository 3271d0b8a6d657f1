#include "wbi/kernels.hpp"

#include <cmath>
#include <sstream>

#include "wbi/errors.hpp"

namespace wbi {
namespace {

// Series terms are accumulated in extended precision; the complex-parameter
// Kummer sums lose a few digits to cancellation at z ~ 16.
using Wide = std::complex<long double>;

Wide widen(Complex z) { return {z.real(), z.imag()}; }
Complex narrow(Wide z) { return {double(z.real()), double(z.imag())}; }

void require_positive(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << who << ": argument must be finite and > 0, got " << x;
    throw DomainError(msg.str());
  }
}

// Three consecutive terms at or below tol * |sum| ends the sum.
class SeriesStop {
 public:
  explicit SeriesStop(const EvalConfig& cfg) : tol_(cfg.series_rel_tol) {}
  bool done(Wide term, Wide sum) {
    small_run_ = (std::abs(term) <= tol_ * std::abs(sum)) ? small_run_ + 1 : 0;
    return small_run_ >= 3;
  }

 private:
  long double tol_;
  int small_run_ = 0;
};

[[noreturn]] void throw_nonconvergence(const char* who, unsigned terms) {
  std::ostringstream msg;
  msg << who << ": series did not converge within " << terms << " terms";
  throw ConvergenceError(msg.str());
}

bool is_integer(double v) { return v == std::round(v); }

bool is_pole(Wide z) {
  return z.imag() == 0.0L && z.real() <= 0.0L && z.real() == std::round(z.real());
}

// Gamma(z) in extended precision: shift up to Re z >= 20, then Stirling's
// series. Only used for the connection coefficients, where a relative error
// of 1e-16 would be amplified by the cancellation between the two M terms.
Wide gamma_wide(Wide z) {
  static constexpr long double kBernoulli[] = {
      1.0L / 6,           -1.0L / 30,        1.0L / 42,         -1.0L / 30,
      5.0L / 66,          -691.0L / 2730,    7.0L / 6,          -3617.0L / 510,
      43867.0L / 798,     -174611.0L / 330,  854513.0L / 138,   -236364091.0L / 2730};
  Wide shift_product = 1.0L;
  Wide w = z;
  while (w.real() < 20.0L) {
    shift_product *= w;
    w += 1.0L;
  }
  const long double half_log_two_pi = 0.918938533204672741780329736405617639861L;
  Wide s = (w - 0.5L) * std::log(w) - w + half_log_two_pi;
  const Wide w2 = w * w;
  Wide wpow = w;
  for (int j = 0; j < 12; ++j) {
    s += kBernoulli[j] / ((2.0L * j + 2.0L) * (2.0L * j + 1.0L) * wpow);
    wpow *= w2;
  }
  return std::exp(s) / shift_product;
}

Wide rgamma_wide(Wide z) { return is_pole(z) ? Wide{} : 1.0L / gamma_wide(z); }

Wide kummer_m_wide(Wide a, Wide b, Wide z, const EvalConfig& cfg) {
  Wide term = 1.0L;
  Wide sum = 1.0L;
  SeriesStop stop(cfg);
  for (unsigned m = 0; m < cfg.series_max_terms; ++m) {
    const long double ml = m;
    term *= (a + ml) / ((b + ml) * (ml + 1.0L)) * z;
    sum += term;
    if (stop.done(term, sum)) return sum;
  }
  throw_nonconvergence("kummer_m", cfg.series_max_terms);
}

Wide whittaker_m_wide(Wide kappa, Wide mu, long double z, const EvalConfig& cfg) {
  const Wide prefactor = std::exp(-0.5L * z + (0.5L + mu) * std::log(z));
  return prefactor * kummer_m_wide(0.5L + mu - kappa, 1.0L + 2.0L * mu, z, cfg);
}

}  // namespace

Complex kummer_m(Complex a, Complex b, Complex z, const EvalConfig& cfg) {
  if (is_nonpositive_integer(b)) {
    std::ostringstream msg;
    msg << "kummer_m: b = " << b.real() << " is a nonpositive integer";
    throw PoleError(msg.str());
  }
  return narrow(kummer_m_wide(widen(a), widen(b), widen(z), cfg));
}

Complex whittaker_m(Complex kappa, Complex mu, double z, const EvalConfig& cfg) {
  require_positive(z, "whittaker_m");
  const Complex b = 1.0 + 2.0 * mu;
  if (is_nonpositive_integer(b)) throw PoleError("whittaker_m: 1 + 2mu is a nonpositive integer");
  return narrow(whittaker_m_wide(widen(kappa), widen(mu), z, cfg));
}

Complex whittaker_w(Complex kappa, Complex mu, double z, const EvalConfig& cfg, Diagnostics* diag) {
  require_positive(z, "whittaker_w");
  const Complex two_mu = 2.0 * mu;

  if (mu == Complex{}) {
    const double n_real = kappa.real() - 0.5;
    if (kappa.imag() != 0.0 || n_real < 0.0 || !is_integer(n_real) || n_real > 170.0)
      throw DegenerateParameterError("whittaker_w: mu = 0 is only supported for kappa = n + 1/2");
    const unsigned n = static_cast<unsigned>(n_real);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * std::tgamma(n + 1.0) * std::sqrt(z) * std::exp(-0.5 * z) * laguerre(n, z);
  }
  if (two_mu.imag() == 0.0 && is_integer(two_mu.real())) {
    std::ostringstream msg;
    msg << "whittaker_w: 2mu = " << two_mu.real() << " is an integer; connection formula is singular";
    throw DegenerateParameterError(msg.str());
  }
  const double distance = std::abs(two_mu - std::round(two_mu.real()));
  if (diag && distance < cfg.near_degenerate_tol) {
    std::ostringstream msg;
    msg << "whittaker_w: 2mu is within " << distance
        << " of an integer; connection formula suffers cancellation";
    diag->warnings.push_back(msg.str());
  }

  const Wide wk = widen(kappa), wm = widen(mu);
  const Wide w1 = gamma_wide(-2.0L * wm) * rgamma_wide(0.5L - wm - wk);
  const Wide w2 = gamma_wide(2.0L * wm) * rgamma_wide(0.5L + wm - wk);
  Wide result{};
  if (w1 != Wide{}) result += w1 * whittaker_m_wide(wk, wm, z, cfg);
  if (w2 != Wide{}) result += w2 * whittaker_m_wide(wk, -wm, z, cfg);
  return narrow(result);
}

Complex bessel_k_via_w(Complex nu, double x, const EvalConfig& cfg) {
  require_positive(x, "bessel_k_via_w");
  return std::sqrt(kPi / (2.0 * x)) * whittaker_w(0.0, nu, 2.0 * x, cfg);
}

Complex bessel_k_quad(Complex nu, double x, const EvalConfig& cfg) {
  require_positive(x, "bessel_k_quad");
  const double re_nu = std::abs(nu.real());
  if (!(re_nu < 1.0)) throw DomainError("bessel_k_quad: requires |Re nu| < 1");

  double cutoff = cfg.quad_cutoff;
  if (cutoff <= 0.0) {
    cutoff = 0.5;
    while (x * std::cosh(cutoff) - re_nu * cutoff <= cfg.quad_decay_exponent) cutoff += 0.25;
  }
  auto integrand = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };

  // Trapezoid sums on an even integrand: h (f(0)/2 + sum_{j>=1} f(jh)).
  double h = cfg.quad_step;
  Complex interior{};
  for (long j = 1; j * h <= cutoff; ++j) interior += integrand(j * h);
  const Complex half_origin = 0.5 * integrand(0.0);
  Complex previous = h * (half_origin + interior);

  for (unsigned level = 0; level < cfg.quad_max_levels; ++level) {
    h *= 0.5;
    // Odd multiples of the new step are the new nodes.
    for (long j = 1; j * h <= cutoff; j += 2) interior += integrand(j * h);
    const Complex current = h * (half_origin + interior);
    if (std::abs(current - previous) <= cfg.quad_rel_tol * std::abs(current)) return current;
    previous = current;
  }
  std::ostringstream msg;
  msg << "bessel_k_quad: no agreement to " << cfg.quad_rel_tol << " after "
      << cfg.quad_max_levels << " halvings (nu = " << nu << ", x = " << x << ")";
  throw ConvergenceError(msg.str());
}

Complex bessel_i(Complex nu, double x, const EvalConfig& cfg) {
  require_positive(x, "bessel_i");
  // I_{-p} = I_p for integer p; the reciprocal-gamma start would vanish.
  if (nu.imag() == 0.0 && nu.real() < 0.0 && is_integer(nu.real())) nu = -nu;

  const long double half_x = 0.5L * x;
  const long double q = half_x * half_x;
  const Wide wnu = widen(nu);
  Wide term = widen(std::exp(nu * std::log(0.5 * x)) * rgamma(nu + 1.0));
  Wide sum = term;
  SeriesStop stop(cfg);
  for (unsigned m = 0; m < cfg.series_max_terms; ++m) {
    const long double ml = m;
    term *= q / ((ml + 1.0L) * (ml + 1.0L + wnu));
    sum += term;
    if (stop.done(term, sum)) return narrow(sum);
  }
  throw_nonconvergence("bessel_i", cfg.series_max_terms);
}

Complex bessel_i_tilde(Complex nu, double x, const EvalConfig& cfg) {
  return bessel_i(nu, x, cfg) + bessel_i(-nu, x, cfg);
}

}  // namespace wbi
