#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "galct/cyclotomic.hpp"

namespace galct::testing {

/// Floating-point value of z with zeta_n = exp(2 pi i / n).
inline std::complex<long double> evaluate(const Cyclo& z) {
  const auto n = static_cast<long double>(z.conductor());
  std::complex<long double> acc = 0;
  const auto& c = z.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(j) / n;
    acc += static_cast<long double>(c[j].to_double()) * std::polar<long double>(1, angle);
  }
  return acc;
}

inline bool close(std::complex<long double> a, std::complex<long double> b, long double tol = 1e-9L) {
  return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b));
}

}  // namespace galct::testing
