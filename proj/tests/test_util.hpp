#pragma once

#include <cmath>
#include <complex>
#include <random>

namespace wbi::test {

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  const double scale = std::abs(want);
  return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

/// Seeded generator so property tests are reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'2024ULL);
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

}  // namespace wbi::test
