#include "galct/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "galct/errors.hpp"

namespace galct {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  u128 mag = abs_u128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

mpz_class mpz_from_i64(std::int64_t v) { return mpz_from_i128(v); }

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  const mpz_class& n = c.get_num();
  const mpz_class& d = c.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    num_ = n.get_si();
    den_ = d.get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(c));
  }
}

Rational Rational::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd_u128(abs_u128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (num >= kMin64 && num <= kMax64 && den <= kMax64) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view num, std::string_view den) {
  mpz_class n;
  mpz_class d;
  if (num.empty() || den.empty() || n.set_str(std::string(num), 10) != 0 ||
      d.set_str(std::string(den), 10) != 0) {
    throw ParseError("malformed rational '" + std::string(num) + "/" + std::string(den) + "'");
  }
  if (d == 0) throw ParseError("rational with zero denominator");
  return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const noexcept {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::optional<std::int64_t> Rational::to_int64() const noexcept {
  if (big_ || den_ != 1) return std::nullopt;
  return num_;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

std::string Rational::numerator_string() const {
  if (big_) return big_->get_num().get_str();
  return std::to_string(num_);
}

std::string Rational::denominator_string() const {
  if (big_) return big_->get_den().get_str();
  return std::to_string(den_);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::operator-() const {
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return Rational(mpq_class(-to_mpq()));
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (s >= kMin64 && s <= kMax64) return Rational(static_cast<std::int64_t>(s));
      return Rational::from_i128(s, 1);
    }
    // Both denominators are < 2^63, so every intermediate fits in 128 bits.
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) - b.num_;
      if (s >= kMin64 && s <= kMax64) return Rational(static_cast<std::int64_t>(s));
      return Rational::from_i128(s, 1);
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      i128 p = static_cast<i128>(a.num_) * b.num_;
      if (p >= kMin64 && p <= kMax64) return Rational(static_cast<std::int64_t>(p));
      return Rational::from_i128(p, 1);
    }
    return Rational::from_i128(static_cast<i128>(a.num_) * b.num_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_i128(static_cast<i128>(a.num_) * b.den_,
                               static_cast<i128>(a.den_) * b.num_);
  }
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace galct
