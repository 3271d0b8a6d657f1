#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "wbi/numeric.hpp"

namespace wbi {

/// Dense complex polynomial, coefficients in ascending degree.
///
/// Trailing exact zeros are stripped on construction, so the zero polynomial
/// has no coefficients and degree() == -1.
class PolyC {
 public:
  PolyC() = default;
  explicit PolyC(std::vector<Complex> coeffs);
  PolyC(std::initializer_list<Complex> coeffs);

  static PolyC monomial(unsigned degree, Complex c = 1.0);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^i (zero beyond the degree).
  Complex operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : Complex{};
  }

  Complex operator()(Complex x) const noexcept;  // Horner

  PolyC derivative() const;
  PolyC conj() const;
  /// Multiply by x^power.
  PolyC shifted(unsigned power) const;
  double max_abs_coeff() const noexcept;

  PolyC& operator+=(const PolyC& rhs);
  PolyC& operator-=(const PolyC& rhs);
  PolyC& operator*=(Complex s);

  friend PolyC operator+(PolyC a, const PolyC& b) { return a += b; }
  friend PolyC operator-(PolyC a, const PolyC& b) { return a -= b; }
  friend PolyC operator*(PolyC a, Complex s) { return a *= s; }
  friend PolyC operator*(Complex s, PolyC a) { return a *= s; }
  friend PolyC operator*(const PolyC& a, const PolyC& b);
  friend bool operator==(const PolyC&, const PolyC&) = default;

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

}  // namespace wbi
