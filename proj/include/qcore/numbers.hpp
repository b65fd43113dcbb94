#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace qcore {

/// Deterministic primality by trial division. Meant for moduli and
/// progression parameters, not cryptographic sizes.
bool is_prime(std::uint64_t n);

/// x^e mod m, m >= 2.
std::uint64_t mod_pow(std::uint64_t x, std::uint64_t e, std::uint64_t m);

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m);

/// Legendre symbol (a | p) for an odd prime p: +1 for a nonzero square,
/// -1 for a nonresidue, 0 when p divides a. Throws if p is not an odd prime.
int legendre(long long a, std::uint64_t p);

/// p-adic valuation of x for prime p. nullopt encodes +infinity (x = 0).
std::optional<long> nu_p(const mpz_class& x, std::uint64_t p);

struct PrimePower {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t value = 0;  // p^n
};

/// Decomposes m as p^n with p prime, n >= 1; nullopt when m is not a
/// prime power or m < 2.
std::optional<PrimePower> as_prime_power(std::uint64_t m);

/// p^n as uint64; throws std::overflow_error when it does not fit.
std::uint64_t pow_u64(std::uint64_t p, unsigned n);

}  // namespace qcore
