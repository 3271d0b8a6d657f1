#pragma once

// Scalar building blocks shared by every module: complex gamma family,
// rising factorials and Laguerre polynomials.

#include <complex>
#include <numbers>

namespace wbi {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrtPi = 1.7724538509055160273;

/// True when z is exactly 0, -1, -2, ...
bool is_nonpositive_integer(Complex z) noexcept;

/// Principal branch of log Gamma(z).
///
/// Lanczos sum (g = 607/128, 15 terms) for Re z >= 1/2 and the reflection
/// formula below that; the imaginary part is placed on the branch that is
/// continuous off the negative real axis. Throws PoleError at 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)). Throws PoleError at poles.
Complex gamma(Complex z);

/// 1 / Gamma(z); exactly zero at the poles of Gamma.
Complex rgamma(Complex z);

/// Rising factorial z (z+1) ... (z+n-1); (z)_0 = 1.
Complex pochhammer(Complex z, unsigned n) noexcept;

/// Laguerre polynomial L_n(z) by the three-term recurrence.
double laguerre(unsigned n, double z) noexcept;

}  // namespace wbi
