#include <doctest.h>

#include <cmath>

#include "frozen_values.hpp"
#include "test_util.hpp"
#include "wbi/errors.hpp"
#include "wbi/kernels.hpp"
#include "wbi/ode_suite.hpp"

using namespace wbi;
using wbi::test::rel_err;

namespace {
double factorial(unsigned n) { return std::tgamma(n + 1.0); }

void check_constants(const OrderParams& p, const std::vector<Complex>& fitted) {
  const auto c = constants_linear_system(p);
  CHECK(std::abs(c.c2 - fitted[1]) < 1e-12);
  CHECK(std::abs(c.c3 - fitted[2]) < 1e-12);
  CHECK(rel_err(c.c4, fitted[3]) < 1e-11);
}
}  // namespace

TEST_CASE("fourth-order coefficients") {
  const auto o0 = ode4_coeffs({0, 0.0});
  CHECK(o0.a[4].is_zero());
  CHECK(o0.a[0](1.0) == Complex(5.0));
  CHECK(o0.a[0][0] == Complex{});
  CHECK(o0.a[0][1] == Complex{});
  CHECK(std::abs(o0.a[2][0] - 2.0) < 1e-15);
  CHECK(std::abs(ode4_coeffs_printed({0, 0.0}).a[2][0] - Complex(0.0, -2.0)) < 1e-15);

  const auto o = ode4_coeffs({3, 1.5});
  CHECK(o.a[0].degree() == 3);
  CHECK(o.a[1].degree() == 2);
  CHECK(o.a[2].degree() == 3);
  CHECK(o.a[3].degree() == 2);
  CHECK(o.a[4].degree() == 1);
  const double k = 1.5;
  CHECK(std::abs(o.a[2][0] - Complex(2.0 + 12.0 * k * k, -6.0 * k - 16.0 * k * k * k)) < 1e-12);
  for (int j : {0, 1, 3, 4}) CHECK(o.a[j] == ode4_coeffs_printed({3, 1.5}).a[j]);
}

TEST_CASE("coupled equation is exact for generated coefficients") {
  auto r0 = coupled_residual(coeffs_from_recurrence({0, 1.0}));
  CHECK(r0.max_residual() == 0.0);
  CHECK(r0.pass);
  for (unsigned n = 0; n <= 20; ++n)
    for (double k : {0.1, 0.5, 1.0, 2.0}) CHECK(coupled_residual(coeffs_from_recurrence({n, k})).pass);
  for (unsigned n = 0; n <= 20; ++n) CHECK(coupled_residual(laguerre_closed_form(n)).pass);

  auto cv = coeffs_from_recurrence({4, 0.5});
  cv.a[2] *= 1.0 + 1e-3;
  CHECK_FALSE(coupled_residual(cv).pass);
}

TEST_CASE("Lambda solves the fourth-order equation") {
  for (unsigned n = 0; n <= 8; ++n)
    for (double k : {0.1, 0.5, 2.0}) {
      const OrderParams p{n, k};
      const auto ode = ode4_coeffs(p);
      const PolyC L = coeffs_from_recurrence(p).big_lambda();
      for (double x : {0.5, 1.5, 3.0, 6.0}) {
        CHECK(std::abs(ode4_residual(L, ode, x)) <= 1e-12);
        // Below degree 4 the finite-difference terms are pure rounding noise.
        if (n >= 4) CHECK(std::abs(ode4_residual([&](double t) { return L(t); }, ode, x)) <= 1e-6);
      }
    }
}

TEST_CASE("product basis") {
  const OrderParams p{1, 1.0};
  const auto rep = product_solution_check(p);
  CHECK(rep.pass);
  CHECK(rep.grid == default_ode4_grid());
  REQUIRE(rep.detail.count("K*W") == 1);
  CHECK(rep.detail.at("K*W").size() == 4);

  SUBCASE("I~ M also solves") {
    const auto ode = ode4_coeffs(p);
    auto f = [&](double x) {
      return bessel_i_tilde({-0.5, 1.0}, x) * whittaker_m(1.5, {0.0, 1.0}, 2 * x);
    };
    for (double x : default_ode4_grid()) CHECK(std::abs(ode4_residual(f, ode, x)) <= 1e-4);
  }
  SUBCASE("printed a3 constant fails") {
    const auto basis = product_basis(p);
    CHECK(std::abs(ode4_residual(basis.f[2], ode4_coeffs_printed(p), 1.0)) > 1e-2);
  }
  SUBCASE("controls") {
    CHECK(ode4_control_check(p, default_ode4_grid()).pass);
    const auto ode = ode4_coeffs(p);
    auto km = [&](double x) {
      return bessel_k_via_w({-0.5, 1.0}, x) * whittaker_m(2.5, {0.0, 1.0}, 2 * x);
    };
    CHECK(std::abs(ode4_residual(km, ode, 2.0)) > 1e-2);
    CHECK(std::abs(ode4_residual([](double x) { return Complex(std::exp(x)); }, ode, 1.0)) > 1e-1);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(product_solution_check({1, 0.0}), DomainError);
    CHECK_THROWS_AS(ode4_residual([](double x) { return Complex(x); }, p, 0.25), DomainError);
    // A kink of order 2.5 at x = 1 makes the fourth difference grow like h^-1.5.
    const PolyC L = coeffs_from_recurrence(p).big_lambda();
    auto kinked = [&](double x) { return L(x) + 1e-7 * std::pow(std::abs(x - 1.0), 2.5); };
    CHECK_THROWS_AS(ode4_residual(kinked, p, 1.0), StepInstabilityError);
    CHECK_NOTHROW(ode4_residual(kinked, p, 2.0));
  }
}

TEST_CASE("trial-function conditions") {
  const auto rep = trial_condition_check({2, 0.5}, {0.5, 1.0, 2.0, 4.0});
  CHECK(rep.pass);
  CHECK(rep.detail.at("W_imag")[1] <= 1e-10);
  CHECK(rep.detail.at("Msum_imag")[1] <= 1e-10);
  CHECK(rep.detail.at("L(W)")[2] <= 1e-6);
  CHECK_THROWS_AS(trial_condition_check({2, 0.0}, {1.0}), DomainError);
}

TEST_CASE("indicial exponents") {
  for (double k : {0.5, 1.0, 2.0})
    for (unsigned n : {0u, 3u, 8u}) {
      const auto r = indicial_analysis(OrderParams{n, k});
      CHECK(r.match);
      CHECK(r.deviation <= 1e-10);
      CHECK(r.polynomial.degree() == 4);
      CHECK(match_roots(r.printed_roots, r.predicted) > 1e-3);
    }
  const auto r1 = indicial_analysis(OrderParams{1, 1.0});
  CHECK(match_roots(r1.predicted, {0.0, 1.0, Complex(0, 2), Complex(1, -2)}) == 0.0);
  // The printed a3 constant moves the non-trivial pair.
  CHECK_FALSE(indicial_analysis(ode4_coeffs_printed({1, 1.0})).match);
}

TEST_CASE("root matching") {
  CHECK(match_roots({1.0, 2.0}, {2.0, 1.0}) == 0.0);
  CHECK(match_roots({1.0, 2.0}, {1.0, 2.5}) == doctest::Approx(0.5));
  CHECK(std::isinf(match_roots({1.0}, {1.0, 2.0})));
}

TEST_CASE("connection constants") {
  SUBCASE("linear system agrees with constants fitted at 50 digits") {
    check_constants({1, 1.0}, frozen::kFittedConstants_1_1);
    check_constants({2, 0.5}, frozen::kFittedConstants_2_0p5);
    check_constants({3, 1.0}, frozen::kFittedConstants_3_1);
    check_constants({4, 2.0}, frozen::kFittedConstants_4_2);
  }
  SUBCASE("closed form of the solution") {
    for (unsigned n = 0; n <= 8; ++n)
      for (double k : {0.1, 0.5, 1.0, 2.0}) {
        const OrderParams p{n, k};
        const auto c = constants_linear_system(p);
        const Complex ik{0.0, k};
        const Complex c4 = -2.0 / kPi * std::cosh(kPi * k) * gamma(-2.0 * ik) / gamma(-double(n) - ik);
        CHECK(std::abs(c.c2 - 1.0) < 1e-13);
        CHECK(std::abs(c.c3) < 1e-11);
        CHECK(rel_err(c.c4, c4) < 1e-12);
        for (double v : linear_system_residuals(p, c)) CHECK(v <= 1e-10);
      }
  }
  SUBCASE("printed forms and relations") {
    const OrderParams p{1, 1.0};
    const auto out = constants_closed_form(p);
    CHECK_FALSE(out.used_printed);
    CHECK(out.notes.size() == 1);
    CHECK(rel_err(out.constants.c4, out.system.c4) == 0.0);
    const auto rel = printed_relation_residuals(p, out.system);
    CHECK(rel[1] <= 1e-10);
    CHECK(rel[0] > 1e-2);
    CHECK(rel[2] > 1e-2);
  }
  SUBCASE("k -> 0 limits") {
    for (unsigned n : {0u, 1u, 4u, 8u}) {
      const double lim = ((n % 2 == 0) ? -1.0 : 1.0) * factorial(n) / kPi;
      const auto c1 = constants_linear_system({n, 1e-3});
      const auto c2 = constants_linear_system({n, 5e-4});
      const double d1 = std::abs(c1.c4 - lim) / std::abs(lim);
      const double d2 = std::abs(c2.c4 - lim) / std::abs(lim);
      CHECK(d1 <= 1e-2);
      CHECK(d1 / d2 == doctest::Approx(2.0).epsilon(0.05));
      CHECK(std::abs(c1.c2 - 1.0) < 1e-12);
      CHECK(std::abs(c1.c3) < 1e-12);
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(constants_linear_system({2, 0.0}), DomainError);
    CHECK_THROWS_AS(constants_printed({2, 0.0}), DomainError);
  }
}

TEST_CASE("reconstruction of Lambda from the product basis") {
  CHECK(lambda_reconstruction({0, 1.0}, {0.5, 1.0, 2.0}).pass);
  const std::vector<double> grid{0.5, 1.0, 2.0, 4.0, 6.0};
  for (unsigned n = 0; n <= 8; ++n)
    for (double k : {0.1, 0.5, 1.0, 2.0}) CHECK(lambda_reconstruction({n, k}, grid).pass);

  const OrderParams p{2, 0.5};
  const auto c = constants_linear_system(p);
  SUBCASE("perturbed constants fail") {
    auto bad = c;
    bad.c4 *= 1.0 + 1e-3;
    CHECK_FALSE(lambda_reconstruction(p, grid, bad).pass);
  }
  SUBCASE("c1 must vanish") {
    auto bad = c;
    bad.c1 = 1e-6;
    const auto r = lambda_reconstruction(p, grid, bad);
    CHECK_FALSE(r.pass);
    CHECK(r.residuals.back() > r.threshold);
  }
  SUBCASE("k = 0 uses the Laguerre form") {
    const auto r = lambda_reconstruction({5, 0.0}, grid);
    CHECK(r.pass);
    CHECK(r.notes.size() == 1);
  }
  CHECK_THROWS_AS(lambda_reconstruction(p, {0.25}), DomainError);
}
