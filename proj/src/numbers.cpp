#include "qcore/numbers.hpp"

#include <limits>
#include <stdexcept>

namespace qcore {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  unsigned __int128 acc = 1;
  unsigned __int128 base = x % m;
  while (e > 0) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  // Extended Euclid over signed 128-bit to dodge overflow near 2^63.
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += static_cast<__int128>(m);
  return static_cast<std::uint64_t>(inv);
}

int legendre(long long a, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("legendre: p must be an odd prime");
  }
  long long r = a % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  if (r == 0) return 0;
  std::uint64_t e = mod_pow(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

std::optional<long> nu_p(const mpz_class& x, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("nu_p: p must be prime");
  if (x == 0) return std::nullopt;
  mpz_class rest, prime(static_cast<unsigned long>(p));
  mp_bitcnt_t v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
  return static_cast<long>(v);
}

std::optional<PrimePower> as_prime_power(std::uint64_t m) {
  if (m < 2) return std::nullopt;
  std::uint64_t p = 0;
  if (m % 2 == 0) {
    p = 2;
  } else {
    for (std::uint64_t d = 3; d <= m / d; d += 2) {
      if (m % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) p = m;  // m itself is prime
  }
  unsigned n = 0;
  std::uint64_t rest = m;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, n, m};
}

std::uint64_t pow_u64(std::uint64_t p, unsigned n) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (acc > std::numeric_limits<std::uint64_t>::max() / p) {
      throw std::overflow_error("pow_u64: overflow");
    }
    acc *= p;
  }
  return acc;
}

}  // namespace qcore
