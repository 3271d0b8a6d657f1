#pragma once

// Checks built on the differential equations satisfied by Lambda(x):
// the coupled second-order equation
//   x L'' + (1 - 2ik) L' + (1 + 2n) L - 2x conj(L)' - conj(L) = 0,
// the fourth-order equation a1 L'''' + a2 L''' + a3 L'' + a4 L' + a5 L = 0
// obtained by eliminating conj(L), and the representation of Lambda in the
// product basis
//   I_{-1/2+ik}(x) M(2x), I_{-1/2+ik}(x) W(2x), K_{-1/2+ik}(x) W(2x), K_{-1/2+ik}(x) M(2x)
// with M = M_{n+1/2,ik}, W = W_{n+1/2,ik}.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "wbi/config.hpp"
#include "wbi/lambda_poly.hpp"
#include "wbi/poly.hpp"
#include "wbi/report.hpp"

namespace wbi {

/// Polynomial coefficient functions a1(x) .. a5(x) of the fourth-order ODE,
/// stored as a[0] .. a[4] (a[j] multiplies the (4 - j)-th derivative).
struct Ode4Coeffs {
  OrderParams params;
  std::array<PolyC, 5> a;
};

/// Coefficients with the constant term of a3 equal to
/// 2i(i - 2k)(i + k)(i + 4k) = 2 - 6ik + 12k^2 - 16ik^3.
Ode4Coeffs ode4_coeffs(const OrderParams& p);

/// As above but with the printed constant term 2i(1 - 2k)(i + k)(i + 4k),
/// which the product solutions do not satisfy.
Ode4Coeffs ode4_coeffs_printed(const OrderParams& p);

/// Coefficients of the coupled-equation residual polynomial; pass iff every
/// coefficient is <= 1e-12 times the largest |a_m|.
ResidualReport coupled_residual(const CoeffVector& cv);

using ComplexFunction = std::function<Complex(double)>;

/// a1 f'''' + ... + a5 f at x with 9-point central differences of step
/// cfg.fd_step * max(1, x), divided by the largest |a_j f^(4-j)|.
/// Throws DomainError outside [0.5, 6] and StepInstabilityError when halving
/// the step moves a residual above cfg.fd_noise_floor by more than 50%.
Complex ode4_residual(const ComplexFunction& f, const Ode4Coeffs& ode, double x,
                      const EvalConfig& cfg = {});
Complex ode4_residual(const ComplexFunction& f, const OrderParams& p, double x,
                      const EvalConfig& cfg = {});

/// Same normalization for a polynomial, with exact derivatives.
Complex ode4_residual(const PolyC& f, const Ode4Coeffs& ode, double x);

/// The four basis products as functions of x.
struct ProductBasis {
  std::array<std::string, 4> names;
  std::array<ComplexFunction, 4> f;
};
ProductBasis product_basis(const OrderParams& p, const EvalConfig& cfg = {});

/// Default grid {0.5, 1, 2, 4}.
std::vector<double> default_ode4_grid();

/// Largest normalized ODE residual over the four basis products at each grid
/// point (per-product values in `detail`); threshold 1e-4. Requires k > 0.
ResidualReport product_solution_check(const OrderParams& p, const std::vector<double>& grid,
                                      const EvalConfig& cfg = {});
ResidualReport product_solution_check(const OrderParams& p, const EvalConfig& cfg = {});

/// Non-solution exp(ix). The reported residual is 1/r for the normalized ODE
/// residual r, so pass means r >= 0.1.
ResidualReport ode4_control_check(const OrderParams& p, const std::vector<double>& grid,
                                  const EvalConfig& cfg = {});

/// Conditions used when substituting Lambda = K_{-1/2+ik} F:
///   W(2x) real, M_{+ik}(2x) + M_{-ik}(2x) real, M_{+ik} - M_{-ik} imaginary
///   (each to 1e-10), and W, M_{+ik}, M_{-ik} annihilated by
///   y'' + (-1 + (2n+1)/x + (1/4 + k^2)/x^2) y to 1e-6 (finite differences).
/// Residuals are divided by their tolerance, so the threshold is 1.
ResidualReport trial_condition_check(const OrderParams& p, const std::vector<double>& grid,
                                     const EvalConfig& cfg = {});

struct IndicialResult {
  OrderParams params;
  PolyC polynomial;                    ///< in sigma
  std::vector<Complex> roots;          ///< from the ODE coefficients
  std::vector<Complex> predicted;      ///< {0, 1, 2ik, 1 - 2ik}
  std::vector<Complex> printed_roots;  ///< 0, 1 and roots of s^2 - s - 4(1 - k)(i + k)
  double deviation = 0.0;              ///< roots vs predicted, best pairing
  double printed_deviation = 0.0;      ///< roots vs printed_roots, best pairing
  bool match = false;                  ///< deviation <= 1e-10
};

/// Leading-order (Frobenius) balance of the ODE at x = 0, solved with a
/// companion-matrix eigenvalue problem.
IndicialResult indicial_analysis(const Ode4Coeffs& ode);
IndicialResult indicial_analysis(const OrderParams& p);

/// Largest distance under the best one-to-one pairing of two root lists.
double match_roots(const std::vector<Complex>& a, const std::vector<Complex>& b);

struct SolutionConstants {
  Complex c1{};
  Complex c2{};
  Complex c3{};
  Complex c4{};
};

/// The gamma-function expressions for c2, c3, c4 as printed.
SolutionConstants constants_printed(const OrderParams& p);

/// Solves the 3x3 system fixed by the asymptotics:
///   c2 2^n/sqrt(pi)                                   = a_{n+1}
///   (2/pi) cosh(pi k) c2 + c3 + G(-n-ik)/G(-2ik) c4   = 0
///   2 c2 + pi c3 / cosh(pi k)                         = 2 a_1 G(1/2+ik) G(ik-n) / (2^{1-2ik} G(2ik))
/// Its solution is c2 = 1, c3 = 0, c4 = -(2/pi) cosh(pi k) G(-2ik) / G(-n-ik).
SolutionConstants constants_linear_system(const OrderParams& p);

/// Normalized residuals of the three equations above.
std::array<double, 3> linear_system_residuals(const OrderParams& p, const SolutionConstants& c);

/// Normalized residuals of the three relations as printed. Only the second
/// coincides with the system above.
std::array<double, 3> printed_relation_residuals(const OrderParams& p, const SolutionConstants& c);

struct ConstantsOutcome {
  SolutionConstants constants;  ///< the set that satisfies the system
  SolutionConstants printed;
  SolutionConstants system;
  std::array<double, 3> printed_residuals{};  ///< of the system at `printed`
  bool used_printed = false;
  std::vector<std::string> notes;
};

/// Evaluates the printed constants and checks them against the linear
/// system to 1e-10; on failure the system solution is used instead.
/// Requires k > 0.
ConstantsOutcome constants_closed_form(const OrderParams& p);

/// Relative deviation between Lambda(x) and
///   c1 I M + c2 I W + c3 K W + c4 K M
/// (K by quadrature), divided by max(|Lambda|, |each term|); threshold 1e-6.
/// Grid must lie in [0.5, 6]. k = 0 compares the recurrence with the Laguerre
/// closed form instead.
ResidualReport lambda_reconstruction(const OrderParams& p, const std::vector<double>& grid,
                                     const SolutionConstants& c, const EvalConfig& cfg = {});
ResidualReport lambda_reconstruction(const OrderParams& p, const std::vector<double>& grid,
                                     const EvalConfig& cfg = {});

}  // namespace wbi
