#pragma once

// High-precision (50 significant digit) reference evaluators.
//
// These are deliberately simple: gamma by upward shift plus Stirling's
// series, Kummer M and I_nu by brute-force term summation, and K_nu from the
// difference of I_{-nu} and I_nu (a route the double-precision kernels do not
// use). They are slow and are only called by the collocation oracle, the
// large-argument checks, and the CLI behind --oracle.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "wbi/numeric.hpp"

namespace wbi::oracle {

using HpReal = boost::multiprecision::cpp_bin_float_50;
using HpComplex = boost::multiprecision::cpp_complex_50;

HpComplex to_hp(Complex z);
Complex to_double(const HpComplex& z);

HpComplex log_gamma(const HpComplex& z);
HpComplex gamma(const HpComplex& z);
HpComplex kummer_m(const HpComplex& a, const HpComplex& b, const HpComplex& z);
HpComplex whittaker_m(const HpComplex& kappa, const HpComplex& mu, const HpReal& z);
HpComplex whittaker_w(const HpComplex& kappa, const HpComplex& mu, const HpReal& z);
HpComplex bessel_i(const HpComplex& nu, const HpReal& x);
HpComplex bessel_k(const HpComplex& nu, const HpReal& x);

// Double-precision facades.
Complex log_gamma(Complex z);
Complex kummer_m(Complex a, Complex b, Complex z);
Complex whittaker_m(Complex kappa, Complex mu, double z);
Complex whittaker_w(Complex kappa, Complex mu, double z);
Complex bessel_i(Complex nu, double x);
Complex bessel_k(Complex nu, double x);

}  // namespace wbi::oracle
