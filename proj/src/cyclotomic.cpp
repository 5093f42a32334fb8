#include "galct/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "galct/errors.hpp"
#include "galct/numtheory.hpp"

namespace galct {

namespace {

using i128 = __int128;

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

std::vector<std::int64_t> poly_exact_divide(std::vector<std::int64_t> num,
                                            const std::vector<std::int64_t>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  if (num.size() - 1 < dn) throw InternalInconsistency("cyclotomic: bad division degree");
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t d = num.size(); d-- > dn;) {
    std::int64_t t = num[d];
    if (t == 0) continue;
    quot[d - dn] = t;
    for (std::size_t i = 0; i <= dn; ++i) num[d - dn + i] -= t * den[i];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw InternalInconsistency("cyclotomic: inexact division");
  return quot;
}

struct PhiCache {
  std::mutex mu;
  std::map<std::uint32_t, std::unique_ptr<const std::vector<std::int64_t>>> polys;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

const std::vector<std::int64_t>& cyclotomic_polynomial_locked(PhiCache& cache, std::uint32_t n) {
  if (auto it = cache.polys.find(n); it != cache.polys.end()) return *it->second;
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (auto d : nt::divisors(n)) {
    if (d == n) continue;
    num = poly_exact_divide(std::move(num),
                            cyclotomic_polynomial_locked(cache, static_cast<std::uint32_t>(d)));
  }
  auto [it, inserted] =
      cache.polys.emplace(n, std::make_unique<const std::vector<std::int64_t>>(std::move(num)));
  return *it->second;
}

struct PhiInfo {
  std::uint32_t phi;
  std::vector<std::pair<std::uint32_t, std::int64_t>> terms;  // nonzero terms below the leading one
};

PhiInfo phi_info(std::uint32_t n) {
  const auto& poly = cyclotomic_polynomial(n);
  PhiInfo info{static_cast<std::uint32_t>(poly.size() - 1), {}};
  for (std::uint32_t i = 0; i < info.phi; ++i)
    if (poly[i] != 0) info.terms.emplace_back(i, poly[i]);
  return info;
}

// Reduces a coefficient vector (any length) modulo Phi_n to length phi(n).
void reduce_rational(std::vector<Rational>& c, std::uint32_t n) {
  PhiInfo info = phi_info(n);
  if (c.size() < info.phi) {
    c.resize(info.phi);
    return;
  }
  for (std::size_t d = c.size(); d-- > info.phi;) {
    if (c[d].is_zero()) continue;
    Rational t = c[d];
    c[d] = Rational();
    for (auto [i, f] : info.terms) c[d - info.phi + i] -= t * Rational(f);
  }
  c.resize(info.phi);
}

std::vector<Rational> apply_exponent_map(const std::vector<Rational>& coeffs, std::uint32_t n,
                                         std::uint64_t r) {
  std::vector<Rational> arr(n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    arr[(r * i) % n] += coeffs[i];
  }
  reduce_rational(arr, n);
  return arr;
}

bool all_zero_from(const std::vector<Rational>& c, std::size_t start) {
  return std::all_of(c.begin() + static_cast<std::ptrdiff_t>(std::min(start, c.size())), c.end(),
                     [](const Rational& q) { return q.is_zero(); });
}

// Generator of the kernel of (Z/n)^x -> (Z/m)^x for m = n / p.
std::uint64_t kernel_generator(std::uint32_t n, std::uint32_t m, std::uint32_t p) {
  if (m % p == 0) return (1 + static_cast<std::uint64_t>(m)) % n;
  if (m == 1) return nt::primitive_root(p) % n;
  return nt::crt(nt::primitive_root(p), p, 1, m);
}

// Coordinates in Q(zeta_m) of a value of Q(zeta_n) known to lie in the subfield.
std::vector<Rational> descend(const std::vector<Rational>& c, std::uint32_t n, std::uint32_t m,
                              std::uint32_t p) {
  if (m % p == 0) {
    // zeta_n has minimal polynomial x^p - zeta_m over Q(zeta_m).
    std::vector<Rational> out(nt::euler_phi(m));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = c[j * p];
    return out;
  }
  // zeta_n = zeta_m^u * zeta_p^v with u p + v m = 1 (mod n). Split the
  // coordinates by the zeta_p exponent; a subfield value z satisfies
  // A_j - A_0 = -z for every bucket j >= 1.
  const std::uint64_t u = nt::invmod(p % m, m);
  const std::uint64_t v = nt::invmod(m % p, p);
  std::vector<Rational> a0(m), a1(m);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    std::uint64_t j = (v * i) % p;
    std::uint64_t e = (u * i) % m;
    if (j == 0) a0[e] += c[i];
    else if (j == 1) a1[e] += c[i];
  }
  for (std::size_t e = 0; e < m; ++e) a0[e] -= a1[e];
  reduce_rational(a0, m);
  return a0;
}

std::vector<Rational> place_scaled(const std::vector<Rational>& c, std::uint32_t stride,
                                   std::uint32_t len) {
  std::vector<Rational> arr(len);
  for (std::size_t i = 0; i < c.size(); ++i) arr[i * stride] = c[i];
  return arr;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw InvalidParameter("cyclotomic_polynomial: n must be positive");
  auto& cache = phi_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  return cyclotomic_polynomial_locked(cache, n);
}

// ---------------------------------------------------------------------------
// GaloisElement

GaloisElement::GaloisElement(std::uint32_t modulus, std::int64_t r) : modulus_(modulus) {
  if (modulus == 0) throw InvalidParameter("GaloisElement: modulus must be positive");
  if (modulus == 1) {
    r_ = 1;
    return;
  }
  r_ = static_cast<std::uint32_t>(nt::mod(r, modulus));
  if (nt::gcd(r_, modulus) != 1)
    throw InvalidParameter("GaloisElement: r = " + std::to_string(r) + " is not a unit modulo " +
                           std::to_string(modulus));
}

GaloisElement GaloisElement::operator*(const GaloisElement& o) const {
  if (modulus_ != o.modulus_) throw InvalidParameter("GaloisElement: modulus mismatch");
  return {modulus_, static_cast<std::int64_t>(static_cast<std::uint64_t>(r_) * o.r_ % modulus_)};
}

// ---------------------------------------------------------------------------
// Cyclo

Cyclo::Cyclo() : n_(1), coeffs_{Rational()} {}
Cyclo::Cyclo(const Rational& q) : n_(1), coeffs_{q} {}
Cyclo::Cyclo(std::int64_t v) : n_(1), coeffs_{Rational(v)} {}

Cyclo Cyclo::canonical(std::uint32_t n, std::vector<Rational> coeffs) {
  for (;;) {
    if (n == 1) break;
    if (all_zero_from(coeffs, 1)) {
      // Only the constant term survives: the value is rational.
      Rational c0 = coeffs.empty() ? Rational() : coeffs[0];
      return Cyclo(1, {c0});
    }
    bool reduced = false;
    for (auto prime : nt::prime_divisors(n)) {
      const auto p = static_cast<std::uint32_t>(prime);
      const std::uint32_t m = n / p;
      // The value lies in Q(zeta_m) iff it is fixed by the cyclic kernel of
      // (Z/n)^x -> (Z/m)^x.
      const std::uint64_t g = kernel_generator(n, m, p);
      if (g != 1 && apply_exponent_map(coeffs, n, g) != coeffs) continue;
      coeffs = descend(coeffs, n, m, p);
      n = m;
      reduced = true;
      break;
    }
    if (!reduced) break;
  }
  return Cyclo(n, std::move(coeffs));
}

Cyclo Cyclo::from_power_basis(std::uint32_t n, std::vector<Rational> coeffs) {
  if (n == 0) throw InvalidParameter("Cyclo: conductor must be positive");
  if (coeffs.size() != nt::euler_phi(n))
    throw InvalidParameter("Cyclo: expected " + std::to_string(nt::euler_phi(n)) +
                           " coordinates for n = " + std::to_string(n) + ", got " +
                           std::to_string(coeffs.size()));
  return canonical(n, std::move(coeffs));
}

Cyclo Cyclo::from_root_sum(std::uint32_t n, std::span<const Rational> terms) {
  if (n == 0) throw InvalidParameter("Cyclo: conductor must be positive");
  std::vector<Rational> arr(n);
  for (std::size_t j = 0; j < terms.size(); ++j)
    if (!terms[j].is_zero()) arr[j % n] += terms[j];
  reduce_rational(arr, n);
  return canonical(n, std::move(arr));
}

Cyclo Cyclo::from_root_multiplicities(std::uint32_t n, std::span<const std::int64_t> terms) {
  std::vector<Rational> r(terms.begin(), terms.end());
  return from_root_sum(n, r);
}

bool Cyclo::is_zero() const noexcept { return n_ == 1 && coeffs_[0].is_zero(); }

bool Cyclo::is_integral() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.is_integer(); });
}

std::optional<Rational> Cyclo::to_rational() const {
  if (n_ != 1) return std::nullopt;
  return coeffs_[0];
}

std::vector<Rational> Cyclo::embed(std::uint32_t m) const {
  if (m == 0 || m % n_ != 0)
    throw ConductorMismatch("Cyclo::embed: conductor " + std::to_string(n_) +
                            " does not divide " + std::to_string(m));
  if (m == n_) return coeffs_;
  auto arr = place_scaled(coeffs_, m / n_, m);
  reduce_rational(arr, m);
  return arr;
}

Cyclo Cyclo::conj() const {
  if (n_ <= 2) return *this;
  return galois_apply(GaloisElement(n_, -1), *this);
}

Cyclo Cyclo::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](const Rational& q) { return -q; });
  return Cyclo(n_, std::move(c));
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == b.n_) {
    std::vector<Rational> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return Cyclo::canonical(a.n_, std::move(c));
  }
  const auto l = static_cast<std::uint32_t>(nt::lcm(a.n_, b.n_));
  std::vector<Rational> arr(l);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) arr[i * (l / a.n_)] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) arr[i * (l / b.n_)] += b.coeffs_[i];
  reduce_rational(arr, l);
  return Cyclo::canonical(l, std::move(arr));
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.is_rational() || b.is_rational()) {
    const Cyclo& q = a.is_rational() ? a : b;
    const Cyclo& z = a.is_rational() ? b : a;
    const Rational& s = q.coeffs_[0];
    if (s.is_zero()) return Cyclo();
    std::vector<Rational> c(z.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = z.coeffs_[i] * s;
    return Cyclo(z.n_, std::move(c));
  }
  const auto l = static_cast<std::uint32_t>(nt::lcm(a.n_, b.n_));
  const std::uint64_t sa = l / a.n_;
  const std::uint64_t sb = l / b.n_;
  std::vector<Rational> arr(l);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      arr[(i * sa + j * sb) % l] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_rational(arr, l);
  return Cyclo::canonical(l, std::move(arr));
}

std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Cyclo::to_string() const {
  if (n_ == 1) return coeffs_[0].to_string();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << "z" << n_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& z) { return os << z.to_string(); }

Cyclo zeta(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw InvalidParameter("zeta: n must be positive");
  std::vector<Rational> arr(n);
  arr[nt::mod(k, n)] = Rational(1);
  return Cyclo::from_root_sum(n, arr);
}

Cyclo galois_apply(const GaloisElement& sigma, const Cyclo& z) {
  if (sigma.modulus() % z.n_ != 0)
    throw ConductorMismatch("galois_apply: conductor " + std::to_string(z.n_) +
                            " does not divide modulus " + std::to_string(sigma.modulus()));
  if (z.n_ == 1) return z;
  const std::uint64_t r = sigma.r() % z.n_;
  if (r == 1) return z;
  // Automorphisms preserve the conductor, so the image is already canonical.
  return Cyclo(z.n_, apply_exponent_map(z.coeffs_, z.n_, r));
}

Cyclo abs_squared(const Cyclo& z) { return z * z.conj(); }

nlohmann::ordered_json to_json(const Cyclo& z) {
  nlohmann::ordered_json j;
  j["n"] = z.conductor();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& q : z.coeffs()) coeffs.push_back({q.numerator_string(), q.denominator_string()});
  j["coeffs"] = std::move(coeffs);
  return j;
}

namespace {

std::string integer_text(const nlohmann::ordered_json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw ParseError(where + ": expected an integer string");
}

}  // namespace

Cyclo cyclo_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw ParseError("cyclo: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 1)
    throw ParseError("cyclo.n: expected a positive integer");
  auto n = j["n"].get<std::uint32_t>();
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError("cyclo.coeffs: expected an array");
  const auto& cs = j["coeffs"];
  if (cs.size() != nt::euler_phi(n))
    throw ParseError("cyclo.coeffs: expected " + std::to_string(nt::euler_phi(n)) +
                     " entries for n = " + std::to_string(n));
  std::vector<Rational> coeffs;
  coeffs.reserve(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string where = "cyclo.coeffs[" + std::to_string(i) + "]";
    if (!cs[i].is_array() || cs[i].size() != 2) throw ParseError(where + ": expected [num, den]");
    coeffs.push_back(Rational::parse(integer_text(cs[i][0], where), integer_text(cs[i][1], where)));
  }
  return Cyclo::from_power_basis(n, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// IntegralKernel

IntegralKernel::IntegralKernel(std::uint32_t n) : n_(n) {
  PhiInfo info = phi_info(n);
  phi_ = info.phi;
  phi_terms_ = std::move(info.terms);
}

std::optional<IntegralKernel::Vec> IntegralKernel::embed(const Cyclo& z) const {
  if (n_ % z.conductor() != 0) return std::nullopt;
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  Vec out(phi_);
  auto coords = z.embed(n_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    auto v = coords[i].to_int64();
    if (!v || *v >= kLimit || *v <= -kLimit) return std::nullopt;
    out[i] = *v;
  }
  return out;
}

IntegralKernel::Vec IntegralKernel::conj(const Vec& a) const {
  Accumulator arr(std::max<std::uint32_t>(n_, 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) arr[(n_ - i) % n_] += a[i];
  auto red = reduce(std::move(arr));
  if (!red) throw InternalInconsistency("IntegralKernel::conj: overflow");
  Vec out(phi_);
  for (std::size_t i = 0; i < phi_; ++i) out[i] = static_cast<std::int64_t>((*red)[i]);
  return out;
}

void IntegralKernel::mul_add(Accumulator& acc, const Vec& a, const Vec& b,
                             std::int64_t weight) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const i128 wa = static_cast<i128>(a[i]) * weight;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += wa * b[j];
  }
}

std::optional<IntegralKernel::Accumulator> IntegralKernel::reduce(Accumulator acc) const {
  constexpr i128 kLimit = static_cast<i128>(1) << 120;
  if (acc.size() < phi_) acc.resize(phi_, 0);
  for (std::size_t d = acc.size(); d-- > phi_;) {
    i128 t = acc[d];
    if (t == 0) continue;
    if (t >= kLimit || t <= -kLimit) return std::nullopt;
    acc[d] = 0;
    for (auto [i, f] : phi_terms_) {
      i128& slot = acc[d - phi_ + i];
      slot -= t * f;
      if (slot >= kLimit || slot <= -kLimit) return std::nullopt;
    }
  }
  acc.resize(phi_);
  return acc;
}

bool IntegralKernel::equals_integer(const Accumulator& reduced, __int128 value) {
  if (reduced.empty()) return value == 0;
  if (reduced[0] != value) return false;
  return std::all_of(reduced.begin() + 1, reduced.end(), [](i128 v) { return v == 0; });
}

}  // namespace galct
