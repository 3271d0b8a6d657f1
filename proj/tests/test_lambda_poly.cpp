#include <doctest.h>

#include <array>

#include "frozen_values.hpp"
#include "test_util.hpp"
#include "wbi/errors.hpp"
#include "wbi/lambda_poly.hpp"

using namespace wbi;
using wbi::test::rel_err;

namespace {
void check_matches(const CoeffVector& cv, const std::vector<Complex>& want, double tol) {
  REQUIRE(cv.a.size() == want.size());
  const double scale = std::abs(want.back());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(cv.a[i] - want[i]) <= tol * scale);
}
}  // namespace

TEST_CASE("boundary coefficients") {
  auto b0 = boundary_coeffs({0, 1.7});
  CHECK(rel_err(b0.a1, 1.0 / kSqrtPi) < 1e-16);
  CHECK(rel_err(b0.a_top, 1.0 / kSqrtPi) < 1e-16);
  CHECK(std::abs(b0.a1.real() - 0.5641896) < 1e-7);

  auto b1 = boundary_coeffs({1, 0.0});
  CHECK(rel_err(b1.a1, -1.0 / kSqrtPi) < 1e-16);
  CHECK(rel_err(b1.a_top, 2.0 / kSqrtPi) < 1e-16);

  auto b11 = boundary_coeffs({1, 1.0});
  CHECK(rel_err(b11.a1, -Complex{1.0, -1.0} / kSqrtPi) < 1e-16);
  CHECK(rel_err(boundary_coeffs({1, 1.0}, Convention::AsPrinted).a1, -Complex{1.0, 1.0} / kSqrtPi) < 1e-16);
}

TEST_CASE("recurrence at n = 1, k = 1 by hand") {
  // a_2 = -[3 a_1 - conj(a_1)] / (1 - 2i) with a_1 = -(1 - i)/sqrt(pi) gives 2/sqrt(pi).
  const auto cv = coeffs_from_recurrence({1, 1.0});
  CHECK(rel_err(cv.coeff(1), -Complex{1.0, -1.0} / kSqrtPi) < 1e-15);
  CHECK(rel_err(cv.coeff(2), 2.0 / kSqrtPi) < 1e-15);
  CHECK(cv.coeff(0) == Complex{});
}

TEST_CASE("recurrence agrees with the coefficients fitted from the identity") {
  check_matches(coeffs_from_recurrence({1, 1.0}), frozen::kFittedCoeffs_1_1, 1e-14);
  check_matches(coeffs_from_recurrence({2, 0.5}), frozen::kFittedCoeffs_2_0p5, 1e-14);
  check_matches(coeffs_from_recurrence({3, 1.0}), frozen::kFittedCoeffs_3_1, 1e-14);
  check_matches(coeffs_from_recurrence({4, 2.0}), frozen::kFittedCoeffs_4_2, 1e-14);
}

TEST_CASE("the printed a_1 convention does not close") {
  CHECK_THROWS_AS(coeffs_from_recurrence({1, 1.0}, Convention::AsPrinted), InvariantViolation);
  const auto outcomes = resolve_convention({5, 0.5});
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].convention == Convention::Resolved);
  CHECK(outcomes[0].consistent);
  CHECK_FALSE(outcomes[1].consistent);
  // k = 0 makes the two candidates identical.
  for (const auto& o : resolve_convention({4, 0.0})) CHECK(o.consistent);
}

TEST_CASE("top coefficient closes for n <= 20") {
  for (unsigned n = 0; n <= 20; ++n)
    for (double k : {0.1, 0.5, 1.0, 2.0, 5.0}) {
      const auto cv = coeffs_from_recurrence({n, k});
      const double want = std::ldexp(1.0, int(n)) / kSqrtPi;
      CHECK(std::abs(cv.a.back() - want) <= 1e-12 * want);
      CHECK(std::abs(cv.a.back().imag()) <= 1e-12 * want);
    }
}

TEST_CASE("degrees of lambda and Lambda") {
  for (unsigned n = 0; n <= 6; ++n) {
    const auto cv = coeffs_from_recurrence({n, 0.7});
    CHECK(cv.lambda().degree() == int(n + 1));
    CHECK(cv.lambda()[0] == Complex{});
    CHECK(cv.big_lambda().degree() == int(n));
  }
}

TEST_CASE("Laguerre closed form") {
  auto l0 = laguerre_closed_form(0);
  CHECK(l0.a.size() == 1);
  CHECK(rel_err(l0.a[0], 1.0 / kSqrtPi) < 1e-16);
  auto l1 = laguerre_closed_form(1);  // (2x^2 - x)/sqrt(pi)
  CHECK(rel_err(l1.a[0], -1.0 / kSqrtPi) < 1e-16);
  CHECK(rel_err(l1.a[1], 2.0 / kSqrtPi) < 1e-16);
  auto l2 = laguerre_closed_form(2);  // (2x - 8x^2 + 4x^3)/sqrt(pi)
  CHECK(rel_err(l2.a[0], 2.0 / kSqrtPi) < 1e-16);
  CHECK(rel_err(l2.a[1], -8.0 / kSqrtPi) < 1e-16);
  CHECK(rel_err(l2.a[2], 4.0 / kSqrtPi) < 1e-16);

  for (unsigned n = 0; n <= 20; ++n) {
    const auto rec = coeffs_from_recurrence({n, 0.0});
    for (const auto& c : rec.a) CHECK(c.imag() == 0.0);
    CHECK(max_relative_difference(rec, laguerre_closed_form(n)) <= 1e-12);
  }
}

TEST_CASE("small k approaches the Laguerre coefficients linearly") {
  for (unsigned n : {2u, 5u, 8u}) {
    const auto lag = laguerre_closed_form(n);
    const double d1 = max_relative_difference(coeffs_from_recurrence({n, 1e-3}), lag);
    const double d2 = max_relative_difference(coeffs_from_recurrence({n, 5e-4}), lag);
    CHECK(d1 <= 1e-2);
    CHECK(d2 == doctest::Approx(d1 / 2).epsilon(0.05));
  }
}

TEST_CASE("second-order recurrence report") {
  CHECK(check_second_order(coeffs_from_recurrence({1, 0.5})).grid.empty());
  CHECK(check_second_order(coeffs_from_recurrence({1, 0.5})).pass);
  const auto rep = check_second_order(coeffs_from_recurrence({5, 0.5}));
  CHECK(rep.grid.size() == 4);
  CHECK(rep.check == "coeffs.second_order_recurrence");
  // The printed relation does not hold, even for the Laguerre case.
  CHECK_FALSE(check_second_order(laguerre_closed_form(4)).pass);
}

TEST_CASE("collocation oracle") {
  SUBCASE("n = 0 gives a constant Lambda") {
    const auto fit = collocation_oracle({0, 1.0}, default_collocation_points(0));
    CHECK(rel_err(fit.coeffs.a[0], 1.0 / kSqrtPi) < 1e-13);
  }
  SUBCASE("matches the recurrence") {
    const auto fit = collocation_oracle({1, 1.0}, default_collocation_points(1));
    CHECK(max_relative_difference(fit.coeffs, coeffs_from_recurrence({1, 1.0})) < 1e-8);
    CHECK(fit.residual < 1e-30);
  }
  SUBCASE("preconditions") {
    const auto xs = default_collocation_points(2);
    CHECK_THROWS_AS(collocation_oracle({2, 0.0}, xs), DomainError);
    CHECK_THROWS_AS(collocation_oracle({2, 1.0}, std::vector<double>{0.5, 1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(collocation_oracle({0, 1.0}, std::vector<double>{0.1, 1.0}), DomainError);
    CHECK_THROWS_AS(collocation_oracle({0, 1.0}, std::vector<double>{1.0, 1.0}), DomainError);
    EvalConfig strict;
    strict.collocation_cond_limit = 10.0;
    CHECK_THROWS_AS(collocation_oracle({3, 0.5}, default_collocation_points(3), strict), IllConditionedError);
  }
}

TEST_CASE("coefficient JSON record") {
  const auto j = to_json(coeffs_from_recurrence({1, 1.0}));
  CHECK(j["n"] == 1);
  CHECK(j["k"] == 1.0);
  CHECK(j["a"].size() == 2);
  CHECK(j["a"][0].size() == 2);
  CHECK(j["convention"].get<std::string>().find("1-ik") != std::string::npos);
}
