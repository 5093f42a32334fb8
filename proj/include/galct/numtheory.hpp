#pragma once

#include <cstdint>
#include <vector>

namespace galct::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// Distinct prime divisors in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Prime factorisation as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
/// Least positive residue of a modulo m (m > 0), for any signed a.
std::uint64_t mod(std::int64_t a, std::uint64_t m);

/// Least generator of (Z/p)^x for prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// Solves x = a mod m, x = b mod n for coprime m, n; result in [0, m n).
std::uint64_t crt(std::uint64_t a, std::uint64_t m, std::uint64_t b, std::uint64_t n);

/// Units of Z/n in ascending order; {1} for n = 1 and n = 2.
std::vector<std::uint64_t> units(std::uint64_t n);

/// Deterministic generating set of (Z/n)^x: scan units in ascending order and
/// keep each one not already in the subgroup generated by the earlier picks.
std::vector<std::uint64_t> unit_group_generators(std::uint64_t n);

/// Multiplicative order of a modulo n.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

}  // namespace galct::nt
