#pragma once

// Coefficients a_m of lambda(x) = x Lambda(x) = sum_{m=1}^{n+1} a_m x^m.
//
// The generator is the first-order coupled recurrence
//   m (m - 2ik) a_{m+1} + (1 + 2n) a_m + (1 - 2m) conj(a_m) = 0,   1 <= m <= n,
// started from a_1 = (-1)^n (1 - ik)_n / sqrt(pi). Starting instead from
// (1 + ik)_n (Convention::AsPrinted) does not give the real top coefficient
// 2^n / sqrt(pi) and is kept only so the discrepancy can be demonstrated.

#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wbi/config.hpp"
#include "wbi/poly.hpp"
#include "wbi/report.hpp"

namespace wbi {

enum class Convention { Resolved, AsPrinted, Laguerre, Collocation };

std::string_view to_string(Convention c) noexcept;

struct CoeffVector {
  OrderParams params;
  Convention convention = Convention::Resolved;
  std::vector<Complex> a;  ///< a[m - 1] holds a_m, m = 1 .. n + 1

  /// a_m with a_0 = 0.
  Complex coeff(unsigned m) const noexcept { return (m == 0 || m > a.size()) ? Complex{} : a[m - 1]; }
  /// lambda(x), degree n + 1, zero constant term.
  PolyC lambda() const;
  /// Lambda(x) = lambda(x) / x, degree n.
  PolyC big_lambda() const;
};

struct BoundaryCoeffs {
  Complex a1;
  Complex a_top;
};

/// a_top = 2^n / sqrt(pi) and a_1 = (-1)^n (1 -/+ ik)_n / sqrt(pi).
BoundaryCoeffs boundary_coeffs(const OrderParams& p, Convention c = Convention::Resolved);

/// Runs the first-order recurrence from a_1 with no checks.
std::vector<Complex> iterate_first_order(const OrderParams& p, Complex a1);

/// Recurrence-generated coefficients. Throws InvariantViolation when a_{n+1}
/// is not real and equal to 2^n / sqrt(pi) to 1e-10 relative.
CoeffVector coeffs_from_recurrence(const OrderParams& p, Convention c = Convention::Resolved);

struct ConventionOutcome {
  Convention convention;
  Complex a_top;
  double top_deviation;  ///< |a_{n+1} - 2^n/sqrt(pi)| / (2^n/sqrt(pi))
  bool consistent;
};

/// Iterates the recurrence from both candidate a_1 values and reports which
/// one closes on the real top coefficient.
std::vector<ConventionOutcome> resolve_convention(const OrderParams& p);

/// Normalized residuals of the printed second-order recurrence
///   m(m+1)(2m-1)(m+2ik)(m-1-2ik) a_{m+2} + (1+2n) m (3m^2+m-2ik) a_{m+1}
///     - 4(1+2m)(n+m)(1+n-m) a_m,   1 <= m <= n-1.
/// Advisory: the printed relation is not satisfied.
ResidualReport check_second_order(const CoeffVector& cv);

/// ((-1)^n n! / sqrt(pi)) x L_n(2x) expanded in powers of x.
CoeffVector laguerre_closed_form(unsigned n);

struct CollocationFit {
  CoeffVector coeffs;
  double condition = 0.0;  ///< of the column-scaled design matrix
  double residual = 0.0;   ///< relative, weighted least-squares residual
};

/// 4(n+1) Chebyshev-distributed points in [0.25, 6].
std::vector<double> default_collocation_points(unsigned n);

/// Recovers a_1..a_{n+1} without the recurrence: least squares on
///   W_{n+1/2,ik}(2x_j) = 2 Re( x_j Lambda(x_j) K_{1/2+ik}(x_j) )
/// over the real and imaginary parts of the a_m, evaluated at 50 digits.
CollocationFit collocation_oracle(const OrderParams& p, std::span<const double> xs,
                                  const EvalConfig& cfg = {});

nlohmann::json to_json(const CoeffVector& cv);

/// Largest coefficient-wise relative difference |a_m - b_m| / |b_m|.
double max_relative_difference(const CoeffVector& a, const CoeffVector& b);

}  // namespace wbi
