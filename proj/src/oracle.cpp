#include "wbi/oracle.hpp"

#include <boost/math/special_functions/bernoulli.hpp>

#include "wbi/errors.hpp"

namespace wbi::oracle {
namespace {

const HpReal kHpPi = boost::math::constants::pi<HpReal>();
const HpReal kSeriesTol("1e-53");
constexpr unsigned kMaxTerms = 20000;
constexpr int kStirlingShift = 40;
constexpr int kStirlingTerms = 30;

bool hp_nonpositive_integer(const HpComplex& z) {
  return z.imag() == 0 && z.real() <= 0 && z.real() == boost::multiprecision::round(z.real());
}

// Brute-force sum with the same three-small-terms stopping rule as the
// double kernels, at 50-digit working precision.
template <class NextTerm>
HpComplex sum_series(HpComplex term, NextTerm next, const char* who) {
  HpComplex sum = term;
  int small_run = 0;
  for (unsigned m = 0; m < kMaxTerms; ++m) {
    term = next(term, m);
    sum += term;
    small_run = (abs(term) <= kSeriesTol * abs(sum)) ? small_run + 1 : 0;
    if (small_run >= 3) return sum;
  }
  throw ConvergenceError(std::string("oracle::") + who + ": series did not converge");
}

}  // namespace

HpComplex to_hp(Complex z) { return HpComplex(HpReal(z.real()), HpReal(z.imag())); }

Complex to_double(const HpComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

HpComplex log_gamma(const HpComplex& z) {
  if (hp_nonpositive_integer(z)) throw PoleError("oracle::log_gamma: pole");
  // log Gamma(z) = log Gamma(z + m) - sum log(z + j); principal logs keep the
  // result on the principal branch.
  HpComplex w = z;
  HpComplex shift_log = 0;
  while (w.real() < kStirlingShift) {
    shift_log += log(w);
    w += 1;
  }
  const HpReal half_log_two_pi = log(2 * kHpPi) / 2;
  HpComplex s = (w - HpReal(0.5)) * log(w) - w + half_log_two_pi;
  const HpComplex w2 = w * w;
  HpComplex wpow = w;
  for (int j = 1; j <= kStirlingTerms; ++j) {
    s += boost::math::bernoulli_b2n<HpReal>(j) / (HpReal(2 * j) * HpReal(2 * j - 1) * wpow);
    wpow *= w2;
  }
  return s - shift_log;
}

HpComplex gamma(const HpComplex& z) { return exp(log_gamma(z)); }

HpComplex kummer_m(const HpComplex& a, const HpComplex& b, const HpComplex& z) {
  if (hp_nonpositive_integer(b)) throw PoleError("oracle::kummer_m: b is a nonpositive integer");
  return sum_series(
      HpComplex(1),
      [&](const HpComplex& t, unsigned m) { return t * (a + m) / ((b + m) * HpReal(m + 1)) * z; },
      "kummer_m");
}

HpComplex whittaker_m(const HpComplex& kappa, const HpComplex& mu, const HpReal& z) {
  if (!(z > 0)) throw DomainError("oracle::whittaker_m: z must be > 0");
  const HpComplex half(HpReal(0.5), HpReal(0));
  return exp(-z / 2 + (half + mu) * log(HpComplex(z))) * kummer_m(half + mu - kappa, 1 + 2 * mu, z);
}

HpComplex whittaker_w(const HpComplex& kappa, const HpComplex& mu, const HpReal& z) {
  const HpComplex two_mu = 2 * mu;
  if (two_mu.imag() == 0 && two_mu.real() == boost::multiprecision::round(two_mu.real()))
    throw DegenerateParameterError("oracle::whittaker_w: 2mu is an integer");
  const HpComplex half(HpReal(0.5), HpReal(0));
  HpComplex result = 0;
  const HpComplex d1 = half - mu - kappa;
  const HpComplex d2 = half + mu - kappa;
  if (!hp_nonpositive_integer(d1))
    result += gamma(-two_mu) / gamma(d1) * whittaker_m(kappa, mu, z);
  if (!hp_nonpositive_integer(d2))
    result += gamma(two_mu) / gamma(d2) * whittaker_m(kappa, -mu, z);
  return result;
}

HpComplex bessel_i(const HpComplex& nu, const HpReal& x) {
  if (!(x > 0)) throw DomainError("oracle::bessel_i: x must be > 0");
  HpComplex order = nu;
  if (hp_nonpositive_integer(order)) order = -order;
  const HpReal q = x * x / 4;
  const HpComplex first = exp(order * log(HpComplex(x / 2)) - log_gamma(order + 1));
  return sum_series(
      first, [&](const HpComplex& t, unsigned m) { return t * q / (HpReal(m + 1) * (order + (m + 1))); },
      "bessel_i");
}

HpComplex bessel_k(const HpComplex& nu, const HpReal& x) {
  const HpComplex s = sin(nu * kHpPi);
  if (abs(s) == 0) throw DegenerateParameterError("oracle::bessel_k: integer order");
  return kHpPi / 2 * (bessel_i(-nu, x) - bessel_i(nu, x)) / s;
}

Complex log_gamma(Complex z) { return to_double(log_gamma(to_hp(z))); }
Complex kummer_m(Complex a, Complex b, Complex z) {
  return to_double(kummer_m(to_hp(a), to_hp(b), to_hp(z)));
}
Complex whittaker_m(Complex kappa, Complex mu, double z) {
  return to_double(whittaker_m(to_hp(kappa), to_hp(mu), HpReal(z)));
}
Complex whittaker_w(Complex kappa, Complex mu, double z) {
  return to_double(whittaker_w(to_hp(kappa), to_hp(mu), HpReal(z)));
}
Complex bessel_i(Complex nu, double x) { return to_double(bessel_i(to_hp(nu), HpReal(x))); }
Complex bessel_k(Complex nu, double x) { return to_double(bessel_k(to_hp(nu), HpReal(x))); }

}  // namespace wbi::oracle
