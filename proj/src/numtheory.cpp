#include "galct/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace galct::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  unsigned __int128 result = 1 % m;
  unsigned __int128 b = base % m;
  while (exp > 0) {
    if (exp & 1U) result = result * b % m;
    b = b * b % m;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t mod(std::int64_t a, std::uint64_t m) {
  auto sm = static_cast<__int128>(m);
  __int128 r = static_cast<__int128>(a) % sm;
  if (r < 0) r += sm;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::invalid_argument("invmod: not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  auto factors = prime_divisors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](std::uint64_t q) { return powmod(g, (p - 1) / q, p) != 1; });
    if (ok) return g;
  }
  throw std::invalid_argument("primitive_root: argument is not prime");
}

std::uint64_t crt(std::uint64_t a, std::uint64_t m, std::uint64_t b, std::uint64_t n) {
  // x = a + m * t with m t = b - a (mod n)
  std::uint64_t mn = m * n;
  std::uint64_t diff = mod(static_cast<std::int64_t>(b % n) - static_cast<std::int64_t>(a % n), n);
  std::uint64_t t = static_cast<std::uint64_t>(static_cast<unsigned __int128>(diff) * invmod(m % n, n) % n);
  return (a % m + m * t) % mn;
}

std::vector<std::uint64_t> units(std::uint64_t n) {
  if (n <= 2) return {1};
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 1; r < n; ++r)
    if (std::gcd(r, n) == 1) out.push_back(r);
  return out;
}

std::vector<std::uint64_t> unit_group_generators(std::uint64_t n) {
  std::vector<std::uint64_t> gens;
  if (n <= 2) return gens;
  std::vector<char> in_subgroup(n, 0);
  std::vector<std::uint64_t> members{1};
  in_subgroup[1] = 1;
  for (std::uint64_t r : units(n)) {
    if (in_subgroup[r]) continue;
    gens.push_back(r);
    // Close the subgroup under multiplication by the new generator.
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::uint64_t x = members[i] * r % n;
      if (!in_subgroup[x]) {
        in_subgroup[x] = 1;
        members.push_back(x);
      }
      for (std::uint64_t g : gens) {
        std::uint64_t y = members[i] * g % n;
        if (!in_subgroup[y]) {
          in_subgroup[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  std::uint64_t x = a % n;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * a % n;
    ++k;
    if (k > n) throw std::invalid_argument("multiplicative_order: not a unit");
  }
  return k;
}

}  // namespace galct::nt
