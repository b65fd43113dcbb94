#pragma once

// Truncated formal power series in q over Z or Z/mZ.
//
// A Series of order T stores the coefficients of q^0 .. q^{T-1}; nothing is
// ever claimed about higher powers. Every operation returns only fully
// determined coefficients: binary operations truncate to the shorter
// operand, dissection shrinks the window by the step, substitution and
// shift keep the window. Order 0 (the empty series) is a legal degenerate
// value so that dissection stays total.
//
// All operations are pure functions on immutable values; series are safe to
// share read-only across threads.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcore/numbers.hpp"
#include "qcore/rings.hpp"

namespace qcore {

template <class Ring>
class Series {
 public:
  using ring_type = Ring;
  using value_type = typename Ring::value_type;

  Series(Ring ring, long order)
      : ring_(std::move(ring)), c_(checked_size(order)) {}

  Series(Ring ring, std::vector<value_type> coeffs)
      : ring_(std::move(ring)), c_(std::move(coeffs)) {}

  long order() const { return static_cast<long>(c_.size()); }
  const Ring& ring() const { return ring_; }

  const value_type& operator[](long n) const { return c_[static_cast<std::size_t>(n)]; }
  value_type& coeff(long n) { return c_[static_cast<std::size_t>(n)]; }

  const std::vector<value_type>& coeffs() const { return c_; }

  /// Copy of the first `order` coefficients (order must not exceed order()).
  Series prefix(long order) const {
    if (order > this->order()) throw std::invalid_argument("Series::prefix: order too large");
    return Series(ring_, std::vector<value_type>(c_.begin(), c_.begin() + order));
  }

 private:
  static std::size_t checked_size(long order) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
    return static_cast<std::size_t>(order);
  }

  Ring ring_;
  std::vector<value_type> c_;
};

using ExactSeries = Series<ExactRing>;
using ModSeries = Series<ModRing>;

namespace detail {

template <class R>
void require_same_ring(const Series<R>& a, const Series<R>& b, const char* op) {
  if (!(a.ring() == b.ring())) {
    throw std::invalid_argument(std::string(op) + ": ring mismatch");
  }
}

inline bool is_zero(const mpz_class& v) { return v == 0; }
inline bool is_zero(std::uint64_t v) { return v == 0; }

template <class R>
long count_nonzero(const Series<R>& a, long upto) {
  long c = 0;
  for (long i = 0; i < upto; ++i) {
    if (!is_zero(a[i])) ++c;
  }
  return c;
}

}  // namespace detail

template <class R>
Series<R> constant_series(R ring, long long v, long order) {
  Series<R> s(ring, order);
  if (order > 0) s.coeff(0) = ring.from_int(v);
  return s;
}

template <class R>
Series<R> one_series(R ring, long order) {
  return constant_series(std::move(ring), 1, order);
}

template <class R>
Series<R> q_series(R ring, long order) {
  Series<R> s(ring, order);
  if (order > 1) s.coeff(1) = ring.from_int(1);
  return s;
}

template <class R>
Series<R> add(const Series<R>& a, const Series<R>& b) {
  detail::require_same_ring(a, b, "add");
  const long n = std::min(a.order(), b.order());
  Series<R> out(a.ring(), n);
  if constexpr (R::is_modular) {
    const std::uint64_t m = a.ring().modulus();
    for (long i = 0; i < n; ++i) {
      std::uint64_t s = a[i] + b[i];  // < 2^63 + 2^63: no overflow
      out.coeff(i) = s >= m ? s - m : s;
    }
  } else {
    for (long i = 0; i < n; ++i) out.coeff(i) = a[i] + b[i];
  }
  return out;
}

template <class R>
Series<R> sub(const Series<R>& a, const Series<R>& b) {
  detail::require_same_ring(a, b, "sub");
  const long n = std::min(a.order(), b.order());
  Series<R> out(a.ring(), n);
  if constexpr (R::is_modular) {
    const std::uint64_t m = a.ring().modulus();
    for (long i = 0; i < n; ++i) {
      out.coeff(i) = a[i] >= b[i] ? a[i] - b[i] : a[i] + m - b[i];
    }
  } else {
    for (long i = 0; i < n; ++i) out.coeff(i) = a[i] - b[i];
  }
  return out;
}

template <class R>
Series<R> negate(const Series<R>& a) {
  Series<R> out(a.ring(), a.order());
  if constexpr (R::is_modular) {
    const std::uint64_t m = a.ring().modulus();
    for (long i = 0; i < a.order(); ++i) out.coeff(i) = a[i] == 0 ? 0 : m - a[i];
  } else {
    for (long i = 0; i < a.order(); ++i) out.coeff(i) = -a[i];
  }
  return out;
}

/// Cauchy product truncated to the shorter operand. Schoolbook convolution
/// with zero-skipping on the sparser operand; in the modular ring, products
/// accumulate in 128 bits and reduce once per coefficient, so the result is
/// identical to naive term-by-term reduction.
template <class R>
Series<R> mul(const Series<R>& a, const Series<R>& b) {
  detail::require_same_ring(a, b, "mul");
  const long n = std::min(a.order(), b.order());
  Series<R> out(a.ring(), n);
  if (n == 0) return out;
  const bool a_outer = detail::count_nonzero(a, n) <= detail::count_nonzero(b, n);
  const Series<R>& u = a_outer ? a : b;
  const Series<R>& v = a_outer ? b : a;
  if constexpr (R::is_modular) {
    const std::uint64_t m = a.ring().modulus();
    const bool small = m < (std::uint64_t{1} << 32);
    std::vector<unsigned __int128> acc(static_cast<std::size_t>(n), 0);
    for (long j = 0; j < n; ++j) {
      const std::uint64_t uj = u[j];
      if (uj == 0) continue;
      if (small) {
        for (long i = 0; i + j < n; ++i) {
          acc[static_cast<std::size_t>(i + j)] += static_cast<unsigned __int128>(uj) * v[i];
        }
      } else {
        for (long i = 0; i + j < n; ++i) {
          acc[static_cast<std::size_t>(i + j)] +=
              static_cast<unsigned __int128>(uj) * v[i] % m;
        }
      }
    }
    for (long i = 0; i < n; ++i) {
      out.coeff(i) = static_cast<std::uint64_t>(acc[static_cast<std::size_t>(i)] % m);
    }
  } else {
    for (long j = 0; j < n; ++j) {
      if (detail::is_zero(u[j])) continue;
      for (long i = 0; i + j < n; ++i) {
        out.coeff(i + j) += u[j] * v[i];  // gmpxx maps this to mpz_addmul
      }
    }
  }
  return out;
}

/// Multiplicative inverse to the series' own order, by the triangular solve
/// c_0 = a_0^{-1}, c_n = -a_0^{-1} * sum_{j=1..n} a_j c_{n-j}.
/// Requires a unit constant term: +-1 over Z, gcd(a_0, m) = 1 over Z/mZ.
template <class R>
Series<R> invert(const Series<R>& a) {
  const long n = a.order();
  Series<R> out(a.ring(), n);
  if (n == 0) return out;
  std::vector<long> supp;
  for (long j = 1; j < n; ++j) {
    if (!detail::is_zero(a[j])) supp.push_back(j);
  }
  if constexpr (R::is_modular) {
    const std::uint64_t m = a.ring().modulus();
    const auto inv0 = mod_inverse(a[0], m);
    if (!inv0) throw std::domain_error("invert: constant term is not a unit");
    const bool small = m < (std::uint64_t{1} << 32);
    out.coeff(0) = *inv0;
    for (long k = 1; k < n; ++k) {
      unsigned __int128 acc = 0;
      for (long j : supp) {
        if (j > k) break;
        if (small) {
          acc += static_cast<unsigned __int128>(a[j]) * out[k - j];
        } else {
          acc += static_cast<unsigned __int128>(a[j]) * out[k - j] % m;
        }
      }
      const std::uint64_t s = static_cast<std::uint64_t>(acc % m);
      out.coeff(k) =
          static_cast<std::uint64_t>(static_cast<unsigned __int128>(*inv0) * (m - s) % m);
    }
  } else {
    if (a[0] != 1 && a[0] != -1) {
      throw std::domain_error("invert: constant term is not a unit");
    }
    const bool a0_negative = a[0] == -1;
    out.coeff(0) = a[0];
    mpz_class acc;
    for (long k = 1; k < n; ++k) {
      acc = 0;
      for (long j : supp) {
        if (j > k) break;
        acc += a[j] * out[k - j];
      }
      out.coeff(k) = a0_negative ? acc : -acc;  // -a_0^{-1} * acc with a_0 = +-1
    }
  }
  return out;
}

/// Repeated-squaring power. pow(a, 0) = 1; negative exponents require a unit
/// constant term.
template <class R>
Series<R> pow(const Series<R>& a, long long e) {
  if (e < 0) {
    if (e == std::numeric_limits<long long>::min()) {
      throw std::invalid_argument("pow: exponent out of range");
    }
    return pow(invert(a), -e);
  }
  Series<R> result = one_series(a.ring(), a.order());
  if (e == 0) return result;
  Series<R> base = a;
  while (true) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return result;
}

/// q -> q^k substitution within the same window: result_n = a_{n/k} when
/// k | n, else 0.
template <class R>
Series<R> subst_qk(const Series<R>& a, long k) {
  if (k < 1) throw std::invalid_argument("subst_qk: k must be >= 1");
  if (k == 1) return a;
  Series<R> out(a.ring(), a.order());
  for (long j = 0; j * k < a.order(); ++j) out.coeff(j * k) = a[j];
  return out;
}

/// q -> q^k substitution into a wider window of the given order. Legal when
/// every requested coefficient is determined, i.e. order <= k*(a.order()-1)+1
/// (the positions k*a.order() and beyond are unknown, not zero).
template <class R>
Series<R> subst_qk_to(const Series<R>& a, long k, long order) {
  if (k < 1) throw std::invalid_argument("subst_qk_to: k must be >= 1");
  if (a.order() == 0 && order > 0) {
    throw std::invalid_argument("subst_qk_to: empty operand");
  }
  if (order > (a.order() - 1) * k + 1) {
    throw std::invalid_argument("subst_qk_to: order not determined by operand");
  }
  Series<R> out(a.ring(), order);
  for (long j = 0; j * k < order; ++j) out.coeff(j * k) = a[j];
  return out;
}

/// Extracts the arithmetic progression pn + r: result_n = a_{pn+r}. The
/// result order ceil((order - r)/p) may be 0 when the window is too small.
template <class R>
Series<R> dissect(const Series<R>& a, long p, long r) {
  if (p < 2) throw std::invalid_argument("dissect: p must be >= 2");
  if (r < 0 || r >= p) throw std::invalid_argument("dissect: residue out of range");
  const long raw = a.order() - r;
  const long n = raw > 0 ? (raw + p - 1) / p : 0;
  Series<R> out(a.ring(), n);
  for (long i = 0; i < n; ++i) out.coeff(i) = a[p * i + r];
  return out;
}

/// Multiplication by q^j within the same window: result_n = a_{n-j} for
/// n >= j, else 0. The top j coefficients of a fall off the end.
template <class R>
Series<R> shift(const Series<R>& a, long j) {
  if (j < 0) throw std::invalid_argument("shift: j must be >= 0");
  Series<R> out(a.ring(), a.order());
  for (long i = j; i < a.order(); ++i) out.coeff(i) = a[i - j];
  return out;
}

template <class R>
Series<R> scale(const Series<R>& a, const typename R::value_type& s) {
  Series<R> out(a.ring(), a.order());
  if constexpr (R::is_modular) {
    const std::uint64_t m = a.ring().modulus();
    const std::uint64_t sr = s % m;
    for (long i = 0; i < a.order(); ++i) {
      out.coeff(i) = static_cast<std::uint64_t>(static_cast<unsigned __int128>(sr) * a[i] % m);
    }
  } else {
    for (long i = 0; i < a.order(); ++i) out.coeff(i) = a[i] * s;
  }
  return out;
}

inline ExactSeries scale_int(const ExactSeries& a, long long v) {
  return scale(a, mpz_class(static_cast<long>(v)));
}

/// Coefficientwise reduction of an exact series into Z/mZ.
inline ModSeries reduce_mod(const ExactSeries& a, std::uint64_t m) {
  ModRing ring(m);
  ModSeries out(ring, a.order());
  for (long i = 0; i < a.order(); ++i) {
    out.coeff(i) = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(m));
  }
  return out;
}

/// Index of the first differing coefficient among the first
/// min(orders, limit) positions; nullopt when that whole prefix agrees.
template <class R>
std::optional<long> first_mismatch(const Series<R>& a, const Series<R>& b, long limit = -1) {
  detail::require_same_ring(a, b, "first_mismatch");
  long n = std::min(a.order(), b.order());
  if (limit >= 0) n = std::min(n, limit);
  for (long i = 0; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

}  // namespace qcore
