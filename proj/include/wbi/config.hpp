#pragma once

#include <string>

#include "wbi/numeric.hpp"

namespace wbi {

/// Largest polynomial index supported; coefficients grow like 2^n and the
/// double-precision paths are validated up to here.
inline constexpr unsigned kMaxDegreeIndex = 25;

/// (n, k): polynomial index and the imaginary part of the Whittaker order.
struct OrderParams {
  unsigned n = 0;
  double k = 0.0;

  void validate() const;
  Complex mu() const noexcept { return {0.0, k}; }
  double kappa() const noexcept { return n + 0.5; }
  friend bool operator==(const OrderParams&, const OrderParams&) = default;
};

/// Tolerances and truncation limits for every numerical kernel. Operations
/// take one of these by const reference and never hard-code their own.
struct EvalConfig {
  // Series (Kummer M, Bessel I): stop after three consecutive terms below
  // series_rel_tol * |partial sum|.
  double series_rel_tol = 1e-16;
  unsigned series_max_terms = 1000;

  // Trapezoid quadrature for K_nu. quad_cutoff <= 0 selects the cutoff T from
  // x cosh T - |Re nu| T > quad_decay_exponent.
  double quad_step = 1.0 / 64.0;
  double quad_cutoff = 0.0;
  double quad_decay_exponent = 45.0;
  double quad_rel_tol = 1e-12;
  unsigned quad_max_levels = 12;

  // Finite differences: step is fd_step * max(1, x). Residuals below
  // fd_noise_floor are treated as converged when testing step stability.
  double fd_step = 1e-2;
  double fd_noise_floor = 1e-5;

  // k == 0 exactly is routed to closed forms; 0 < k < small_k_refusal is
  // refused in double precision (gamma cancellation).
  double k_zero_threshold = 0.0;
  double small_k_refusal = 1e-3;

  // Whittaker W: warn when 2*mu is within this distance of an integer.
  double near_degenerate_tol = 1e-6;

  // Collocation oracle (runs at 50 digits): largest accepted condition number
  // of the column-scaled design matrix, and required relative residual.
  double collocation_cond_limit = 1e30;
  double collocation_residual_tol = 1e-8;

  /// Positivity of every tolerance.
  void validate_tolerances() const;
  /// validate_tolerances() plus series_max_terms >= 10, quad_max_levels >= 1.
  void validate() const;
};

/// Reads an EvalConfig from a JSON object; missing keys keep their defaults.
EvalConfig load_config(const std::string& path);

}  // namespace wbi
