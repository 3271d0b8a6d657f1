#include "wbi/numeric.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "wbi/errors.hpp"

namespace wbi {
namespace {

constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

const double kHalfLogTwoPi = 0.5 * std::log(2.0 * kPi);

Complex log_gamma_lanczos(Complex z) {
  const Complex w = z - 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (w + double(i));
  const Complex t = w + kLanczosG + 0.5;
  return kHalfLogTwoPi + (w + 0.5) * std::log(t) - t + std::log(sum);
}

// sin(pi z) with exact zeros at integers on the real axis.
Complex sin_pi(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double r = x - 2.0 * std::round(0.5 * x);
  return {std::sin(kPi * r) * std::cosh(kPi * y), std::cos(kPi * r) * std::sinh(kPi * y)};
}

// Imaginary part of log Gamma(z) on the principal branch, from
// Gamma(z) = Gamma(z+m) / prod (z+j); only used to pick the 2*pi multiple.
double principal_arg_estimate(Complex z) {
  double shift = 0.0;
  int m = 0;
  while (z.real() + m < 0.5) {
    shift += std::arg(z + double(m));
    ++m;
  }
  return log_gamma_lanczos(z + double(m)).imag() - shift;
}

}  // namespace

bool is_nonpositive_integer(Complex z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    std::ostringstream msg;
    msg << "log_gamma: pole at z = " << z.real();
    throw PoleError(msg.str());
  }
  if (z.real() >= 0.5) return log_gamma_lanczos(z);

  const Complex reflected = std::log(kPi) - std::log(sin_pi(z)) - log_gamma_lanczos(1.0 - z);
  const double target = principal_arg_estimate(z);
  const double turns = std::round((target - reflected.imag()) / (2.0 * kPi));
  return {reflected.real(), reflected.imag() + 2.0 * kPi * turns};
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

Complex rgamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

Complex pochhammer(Complex z, unsigned n) noexcept {
  Complex p = 1.0;
  for (unsigned j = 0; j < n; ++j) p *= z + double(j);
  return p;
}

double laguerre(unsigned n, double z) noexcept {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 - z;
  for (unsigned j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 - z) * cur - j * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace wbi
