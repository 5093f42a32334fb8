#include <doctest.h>

#include <random>
#include <vector>

#include "../support/numeric_oracle.hpp"
#include "galct/cyclotomic.hpp"
#include "galct/errors.hpp"
#include "galct/numtheory.hpp"

using namespace galct;
using galct::testing::close;
using galct::testing::evaluate;

namespace {

// Conductor of zeta_n^k computed from divisibility alone.
std::uint32_t root_conductor(std::uint32_t n, std::int64_t k) {
  auto m = static_cast<std::uint32_t>(n / nt::gcd(n, nt::mod(k, n) == 0 ? n : nt::mod(k, n)));
  if (m % 4 == 2) m /= 2;
  return m;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  for (std::uint32_t n = 1; n <= 120; ++n) CHECK(cyclotomic_polynomial(n).size() == nt::euler_phi(n) + 1);
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p = cyclotomic_polynomial(105);
  CHECK(std::count(p.begin(), p.end(), -2) == 2);
}

TEST_CASE("zeta reduces to the conductor") {
  CHECK(zeta(1, 0) == Cyclo(1));
  CHECK(zeta(4, 2) == Cyclo(-1));
  CHECK(zeta(4, 2).conductor() == 1);
  CHECK(zeta(3, 1) + zeta(3, 2) == Cyclo(-1));
  CHECK(zeta(6, 1) == -zeta(3, 2));
  for (std::uint32_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = -n; k <= static_cast<std::int64_t>(n); ++k) {
      auto z = zeta(n, k);
      CHECK(z.conductor() == root_conductor(n, k));
      const long double angle = 2 * std::numbers::pi_v<long double> * k / n;
      CHECK(close(evaluate(z), std::polar<long double>(1, angle)));
    }
  }
}

TEST_CASE("arithmetic examples") {
  CHECK(zeta(3, 1) * zeta(4, 1) == zeta(12, 7));
  CHECK((zeta(3, 1) * zeta(4, 1)).conductor() == 12);
  CHECK(zeta(5, 1) + Cyclo(0) == zeta(5, 1));
  auto s = zeta(8, 1) + zeta(8, -1);
  CHECK(s * s == Cyclo(2));
  CHECK(s.conductor() == 8);
  CHECK(zeta(5, 1) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4) == Cyclo(-1));
  CHECK(is_rational(zeta(5, 1) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4)));
  CHECK_FALSE(is_rational(zeta(3, 1)));
  CHECK(is_rational(Cyclo(Rational(7, 2))));
  // sqrt(-3) = zeta3 - zeta3^2 has conductor 3; sqrt(5) lives in Q(zeta5).
  CHECK((zeta(3, 1) - zeta(3, 2)).conductor() == 3);
  CHECK((zeta(5, 1) - zeta(5, 2) - zeta(5, 3) + zeta(5, 4)).conductor() == 5);
  // Periods over subgroups of (Z/15)^x: {1,4} is fixed only by itself, while
  // {1,4,11,14} contains the kernel {1,11} of reduction mod 5.
  CHECK((zeta(15, 1) + zeta(15, 4)).conductor() == 15);
  auto period = zeta(15, 1) + zeta(15, 4) + zeta(15, 11) + zeta(15, 14);
  CHECK(period.conductor() == 5);
  CHECK(period == -(zeta(5, 2) + zeta(5, 3)));
  auto q3 = zeta(15, 5) + zeta(15, 10);
  CHECK(q3 == Cyclo(-1));
}

TEST_CASE("galois_apply") {
  CHECK(galois_apply(GaloisElement(3, 2), zeta(3, 1)) == zeta(3, 2));
  CHECK(galois_apply(GaloisElement(12, 5), Cyclo(Rational(7, 2))) == Cyclo(Rational(7, 2)));
  auto real5 = zeta(5, 1) + zeta(5, 4);
  CHECK(galois_apply(GaloisElement(5, 4), real5) == real5);
  CHECK(galois_apply(GaloisElement(5, 2), real5) == zeta(5, 2) + zeta(5, 3));
  CHECK_THROWS_AS((void)galois_apply(GaloisElement(4, 3), zeta(3, 1)), ConductorMismatch);
  CHECK_THROWS_AS(GaloisElement(6, 2), InvalidParameter);
  CHECK(GaloisElement(1, 0).r() == 1);
}

TEST_CASE("abs_squared") {
  CHECK(abs_squared(zeta(3, 1) - zeta(3, 2)) == Cyclo(3));
  CHECK(abs_squared(Cyclo(1)) == Cyclo(1));
  CHECK(abs_squared(zeta(5, 1) - zeta(5, 4)) + abs_squared(zeta(5, 2) - zeta(5, 3)) == Cyclo(5));
  CHECK(abs_squared(Cyclo(0)).is_zero());
}

TEST_CASE("random values agree with floating-point evaluation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::vector<std::uint32_t> ns{1, 3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 21, 24, 28, 30, 36, 40, 56, 60, 84};
  for (int iter = 0; iter < 400; ++iter) {
    auto n = ns[rng() % ns.size()];
    auto m = ns[rng() % ns.size()];
    std::vector<std::int64_t> ta(n), tb(m);
    for (auto& t : ta) t = coef(rng);
    for (auto& t : tb) t = coef(rng);
    auto a = Cyclo::from_root_multiplicities(n, ta);
    auto b = Cyclo::from_root_multiplicities(m, tb);
    std::complex<long double> va = 0, vb = 0;
    for (std::uint32_t j = 0; j < n; ++j)
      va += static_cast<long double>(ta[j]) *
            std::polar<long double>(1, 2 * std::numbers::pi_v<long double> * j / n);
    for (std::uint32_t j = 0; j < m; ++j)
      vb += static_cast<long double>(tb[j]) *
            std::polar<long double>(1, 2 * std::numbers::pi_v<long double> * j / m);
    CHECK(close(evaluate(a), va));
    CHECK(close(evaluate(a + b), va + vb));
    CHECK(close(evaluate(a * b), va * vb));
    CHECK(close(evaluate(a.conj()), std::conj(va)));
    CHECK(n % a.conductor() == 0);
  }
}

TEST_CASE("json round trip") {
  auto z = zeta(12, 5) * Cyclo(Rational(-3, 7)) + Cyclo(Rational(1, 2));
  auto j = to_json(z);
  CHECK(j["n"] == 12);
  CHECK(cyclo_from_json(j) == z);
  CHECK_THROWS_AS((void)cyclo_from_json(nlohmann::ordered_json::parse(R"({"n": 5, "coeffs": [["1","1"]]})")),
                  ParseError);
}

TEST_CASE("integral kernel matches Cyclo arithmetic") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (std::uint32_t n : {1u, 4u, 8u, 12u, 15u, 24u, 168u}) {
    IntegralKernel ker(n);
    for (int iter = 0; iter < 30; ++iter) {
      std::vector<std::int64_t> ta(n), tb(n);
      for (auto& t : ta) t = coef(rng);
      for (auto& t : tb) t = coef(rng);
      auto a = Cyclo::from_root_multiplicities(n, ta);
      auto b = Cyclo::from_root_multiplicities(n, tb);
      auto va = ker.embed(a);
      auto vb = ker.embed(b);
      REQUIRE(va);
      REQUIRE(vb);
      auto acc = ker.make_accumulator();
      ker.mul_add(acc, *va, ker.conj(*vb), 3);
      auto red = ker.reduce(acc);
      REQUIRE(red);
      std::vector<Rational> coeffs;
      for (std::size_t i = 0; i < ker.phi(); ++i) coeffs.emplace_back(static_cast<std::int64_t>((*red)[i]));
      CHECK(Cyclo::from_power_basis(n, coeffs) == Cyclo(3) * a * b.conj());
    }
  }
  CHECK_FALSE(IntegralKernel(5).embed(Cyclo(Rational(1, 2))));
  CHECK_FALSE(IntegralKernel(5).embed(zeta(3, 1)));
}
