#pragma once

// Double-precision evaluators for Kummer's M, the Whittaker functions and the
// modified Bessel functions of complex order. K_nu has two independent
// routes (connection formula and trapezoid quadrature) so that each can be
// checked against the other.

#include <string>
#include <vector>

#include "wbi/config.hpp"
#include "wbi/numeric.hpp"

namespace wbi {

/// Non-fatal findings raised while evaluating a kernel.
struct Diagnostics {
  std::vector<std::string> warnings;
};

/// Kummer M(a, b, z) = sum (a)_m / (b)_m z^m / m!.
/// Throws PoleError for b in {0, -1, ...}, ConvergenceError after
/// cfg.series_max_terms terms.
Complex kummer_m(Complex a, Complex b, Complex z, const EvalConfig& cfg = {});

/// M_{kappa,mu}(z) = e^{-z/2} z^{1/2+mu} M(1/2 + mu - kappa, 1 + 2 mu, z), z > 0.
Complex whittaker_m(Complex kappa, Complex mu, double z, const EvalConfig& cfg = {});

/// W_{kappa,mu}(z), z > 0.
///
/// Generic branch: the connection formula
///   W = Gamma(-2mu)/Gamma(1/2-mu-kappa) M_{kappa,mu} + Gamma(2mu)/Gamma(1/2+mu-kappa) M_{kappa,-mu}.
/// mu == 0 with kappa = n + 1/2 uses (-1)^n n! z^{1/2} e^{-z/2} L_n(z).
/// Any other integer 2mu throws DegenerateParameterError; 2mu within
/// cfg.near_degenerate_tol of an integer adds a warning to `diag`.
Complex whittaker_w(Complex kappa, Complex mu, double z, const EvalConfig& cfg = {},
                    Diagnostics* diag = nullptr);

/// K_nu(x) = sqrt(pi / 2x) W_{0,nu}(2x). Requires 2nu not an integer.
Complex bessel_k_via_w(Complex nu, double x, const EvalConfig& cfg = {});

/// K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt by the trapezoid rule with
/// step halving. Requires |Re nu| < 1.
Complex bessel_k_quad(Complex nu, double x, const EvalConfig& cfg = {});

/// I_nu(x) from its ascending series.
Complex bessel_i(Complex nu, double x, const EvalConfig& cfg = {});

/// I_nu(x) + I_{-nu}(x).
Complex bessel_i_tilde(Complex nu, double x, const EvalConfig& cfg = {});

}  // namespace wbi
