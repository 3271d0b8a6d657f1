#include "wbi/poly.hpp"

#include <algorithm>
#include <cmath>

namespace wbi {

PolyC::PolyC(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyC::PolyC(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

PolyC PolyC::monomial(unsigned degree, Complex c) {
  std::vector<Complex> v(degree + 1);
  v[degree] = c;
  return PolyC(std::move(v));
}

void PolyC::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex PolyC::operator()(Complex x) const noexcept {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyC PolyC::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = double(i) * coeffs_[i];
  return PolyC(std::move(d));
}

PolyC PolyC::conj() const {
  std::vector<Complex> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](Complex z) { return std::conj(z); });
  return PolyC(std::move(c));
}

PolyC PolyC::shifted(unsigned power) const {
  if (is_zero()) return {};
  std::vector<Complex> c(power, Complex{});
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return PolyC(std::move(c));
}

double PolyC::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

PolyC& PolyC::operator+=(const PolyC& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyC& PolyC::operator-=(const PolyC& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyC& PolyC::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

PolyC operator*(const PolyC& a, const PolyC& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return PolyC(std::move(c));
}

}  // namespace wbi
