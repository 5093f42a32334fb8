#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "galct/rational.hpp"

namespace galct {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed by exact division of x^n - 1 by the lower-divisor cyclotomic
/// polynomials and cached process-wide.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

/// Unit r of Z/n, acting on Q(zeta_n) by zeta -> zeta^r.
class GaloisElement {
 public:
  /// r is reduced modulo n; throws InvalidParameter unless gcd(r, n) = 1.
  /// For n = 1 the single element is represented by r = 1.
  GaloisElement(std::uint32_t modulus, std::int64_t r);

  [[nodiscard]] std::uint32_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::uint32_t r() const noexcept { return r_; }

  /// Composition: (this * o) acts as this after o, i.e. r = r_this * r_o.
  [[nodiscard]] GaloisElement operator*(const GaloisElement& o) const;
  friend bool operator==(const GaloisElement&, const GaloisElement&) = default;

 private:
  std::uint32_t modulus_;
  std::uint32_t r_;
};

/// Exact element of a cyclotomic field.
///
/// Stored as coordinates over the power basis 1, z, ..., z^(phi(n)-1) of
/// Q(zeta_n), where n is always the minimal conductor of the value. Every
/// constructor and operation returns the canonical form, so equality is
/// coefficient-wise.
class Cyclo {
 public:
  Cyclo();
  Cyclo(const Rational& q);  // NOLINT(google-explicit-constructor)
  Cyclo(std::int64_t v);     // NOLINT(google-explicit-constructor)

  /// Value given by power-basis coordinates in Q(zeta_n); coeffs.size() must
  /// equal phi(n).
  static Cyclo from_power_basis(std::uint32_t n, std::vector<Rational> coeffs);
  /// Value sum_j terms[j] * zeta_n^j for j < terms.size() (any length; exponents
  /// are read modulo n).
  static Cyclo from_root_sum(std::uint32_t n, std::span<const Rational> terms);
  /// Same as from_root_sum for integer multiplicities.
  static Cyclo from_root_multiplicities(std::uint32_t n, std::span<const std::int64_t> terms);

  [[nodiscard]] std::uint32_t conductor() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_rational() const noexcept { return n_ == 1; }
  /// All power-basis coordinates are integers (the value is an algebraic
  /// integer).
  [[nodiscard]] bool is_integral() const noexcept;
  [[nodiscard]] std::optional<Rational> to_rational() const;

  /// Power-basis coordinates of this value inside Q(zeta_m); m must be a
  /// multiple of the conductor.
  [[nodiscard]] std::vector<Rational> embed(std::uint32_t m) const;

  /// Complex conjugate, i.e. the Galois element r = -1.
  [[nodiscard]] Cyclo conj() const;

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  friend bool operator==(const Cyclo& a, const Cyclo& b) = default;
  /// Total order: conductor first, then coordinates lexicographically.
  friend std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b);

  /// Human-readable form, e.g. "-1 - z3" (z<n> is a primitive n-th root).
  [[nodiscard]] std::string to_string() const;

 private:
  Cyclo(std::uint32_t n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}
  static Cyclo canonical(std::uint32_t n, std::vector<Rational> coeffs);

  std::uint32_t n_ = 1;
  std::vector<Rational> coeffs_;

  friend Cyclo galois_apply(const GaloisElement& sigma, const Cyclo& z);
};

/// zeta_n^k in canonical form.
Cyclo zeta(std::uint32_t n, std::int64_t k);

/// Field automorphism zeta -> zeta^r. Throws ConductorMismatch unless the
/// conductor of z divides sigma.modulus().
Cyclo galois_apply(const GaloisElement& sigma, const Cyclo& z);

/// z * conj(z).
Cyclo abs_squared(const Cyclo& z);

inline bool is_rational(const Cyclo& z) { return z.is_rational(); }

std::ostream& operator<<(std::ostream& os, const Cyclo& z);

/// {"n": int, "coeffs": [[num, den], ...]} with integers as decimal strings.
nlohmann::ordered_json to_json(const Cyclo& z);
/// Parses and canonicalizes; throws ParseError on malformed input.
Cyclo cyclo_from_json(const nlohmann::ordered_json& j);

/// Integer arithmetic in Z[zeta_n] for bulk sums of products.
///
/// Elements are power-basis coordinate vectors of algebraic integers. Products
/// are accumulated unreduced and reduced modulo Phi_n once at the end, with
/// 128-bit accumulators. Callers fall back to Cyclo arithmetic whenever
/// embed() declines a value or reduce() reports overflow.
class IntegralKernel {
 public:
  using Vec = std::vector<std::int64_t>;
  using Accumulator = std::vector<__int128>;

  explicit IntegralKernel(std::uint32_t n);

  [[nodiscard]] std::uint32_t n() const noexcept { return n_; }
  [[nodiscard]] std::uint32_t phi() const noexcept { return phi_; }

  /// Coordinates of z in Z[zeta_n]; nullopt when z is not integral, its
  /// conductor does not divide n, or a coordinate exceeds 2^40 in magnitude.
  [[nodiscard]] std::optional<Vec> embed(const Cyclo& z) const;
  [[nodiscard]] Vec conj(const Vec& a) const;

  [[nodiscard]] Accumulator make_accumulator() const { return Accumulator(2 * phi_ - 1, 0); }
  /// acc += weight * a * b (unreduced).
  void mul_add(Accumulator& acc, const Vec& a, const Vec& b, std::int64_t weight = 1) const;
  /// Reduces modulo Phi_n; nullopt on intermediate overflow.
  [[nodiscard]] std::optional<Accumulator> reduce(Accumulator acc) const;

  /// Reduced accumulator equals the rational integer `value`.
  [[nodiscard]] static bool equals_integer(const Accumulator& reduced, __int128 value);

 private:
  std::uint32_t n_;
  std::uint32_t phi_;
  std::vector<std::pair<std::uint32_t, std::int64_t>> phi_terms_;  // nonzero low terms of Phi_n
};

}  // namespace galct
