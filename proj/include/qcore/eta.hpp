#pragma once

// The named series of the theory -- f_k = (q^k; q^k)_inf, the q-Pochhammer
// products (q^a; q^b)_inf, the Rogers-Ramanujan product R(q), the cube
// f_1^3 -- plus a small expression language for eta quotients.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qcore/series.hpp"

namespace qcore {

/// (q^a; q^b)_inf = prod_{i>=0} (1 - q^{a+ib}), truncated. Requires
/// 1 <= a <= b.
template <class R>
Series<R> pochhammer_series(long a, long b, R ring, long T) {
  if (a < 1 || b < a) throw std::invalid_argument("pochhammer_series: need 1 <= a <= b");
  if (T < 1) throw std::invalid_argument("pochhammer_series: T must be >= 1");
  Series<R> out = one_series(ring, T);
  for (long m = a; m < T; m += b) {
    // in-place multiply by (1 - q^m)
    if constexpr (R::is_modular) {
      const std::uint64_t mod = ring.modulus();
      for (long n = T - 1; n >= m; --n) {
        const std::uint64_t lo = out[n - m];
        out.coeff(n) = out[n] >= lo ? out[n] - lo : out[n] + mod - lo;
      }
    } else {
      for (long n = T - 1; n >= m; --n) out.coeff(n) -= out[n - m];
    }
  }
  return out;
}

/// f_k via the pentagonal number series
/// sum_{m in Z} (-1)^m q^{k m(3m-1)/2}.
template <class R>
Series<R> fk_series(long k, R ring, long T) {
  if (k < 1) throw std::invalid_argument("fk_series: k must be >= 1");
  if (T < 1) throw std::invalid_argument("fk_series: T must be >= 1");
  Series<R> out(ring, T);
  const auto one = ring.from_int(1);
  const auto minus_one = ring.from_int(-1);
  out.coeff(0) = one;
  for (long m = 1;; ++m) {
    const long g1 = m * (3 * m - 1) / 2;  // exponent for +m
    const long g2 = m * (3 * m + 1) / 2;  // exponent for -m
    if (k > (T - 1) / g1) break;          // k*g1 >= T, and g2 > g1
    const auto& sign = (m & 1) ? minus_one : one;
    out.coeff(k * g1) = sign;
    if (g2 <= (T - 1) / k) out.coeff(k * g2) = sign;
  }
  return out;
}

/// f_1^3 via the alternating series sum_{m>=0} (-1)^m (2m+1) q^{m(m+1)/2}.
template <class R>
Series<R> f1_cubed_series(R ring, long T) {
  if (T < 1) throw std::invalid_argument("f1_cubed_series: T must be >= 1");
  Series<R> out(ring, T);
  for (long m = 0;; ++m) {
    const long e = m * (m + 1) / 2;
    if (e >= T) break;
    out.coeff(e) = ring.from_int((m & 1) ? -(2 * m + 1) : (2 * m + 1));
  }
  return out;
}

/// R(q) = (q; q^5)(q^4; q^5) / ((q^2; q^5)(q^3; q^5)), constant term 1.
template <class R>
Series<R> rr_series(R ring, long T) {
  auto num = mul(pochhammer_series(1, 5, ring, T), pochhammer_series(4, 5, ring, T));
  auto den = mul(pochhammer_series(2, 5, ring, T), pochhammer_series(3, 5, ring, T));
  return mul(num, invert(den));
}

// ---------------------------------------------------------------------------
// Eta-quotient expressions.
//
// Grammar (whitespace insignificant):
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | base ("^" sint)?
//   base   := "f" uint | "P(" uint "," uint ")" | "R" | "q" | uint
//           | "(" expr ")" | "sub(" expr "," uint ")"
// "^" is non-associative: powers of powers need parentheses.
// ---------------------------------------------------------------------------

struct EtaExpr;
using EtaExprPtr = std::shared_ptr<const EtaExpr>;

struct EtaExpr {
  enum class Kind { fk, pochhammer, rr, q, literal, add, sub, mul, div, pow, subst };

  Kind kind;
  long long value = 0;   // fk: k; pochhammer: a; literal: value; pow: exponent; subst: k
  long long value2 = 0;  // pochhammer: b
  EtaExprPtr left, right;
};

EtaExprPtr eta_fk(long long k);
EtaExprPtr eta_pochhammer(long long a, long long b);
EtaExprPtr eta_rr();
EtaExprPtr eta_q();
EtaExprPtr eta_literal(long long v);
EtaExprPtr eta_add(EtaExprPtr l, EtaExprPtr r);
EtaExprPtr eta_sub(EtaExprPtr l, EtaExprPtr r);
EtaExprPtr eta_mul(EtaExprPtr l, EtaExprPtr r);
EtaExprPtr eta_div(EtaExprPtr l, EtaExprPtr r);
EtaExprPtr eta_pow(EtaExprPtr base, long long e);
EtaExprPtr eta_subst(EtaExprPtr inner, long long k);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the grammar above; throws ParseError with a 0-based position on
/// malformed input.
EtaExprPtr parse_expr(std::string_view text);

/// Round-trippable rendering (fully parenthesized only where needed).
std::string to_string(const EtaExpr& e);

/// Compositional evaluation into a truncated series. Division and negative
/// powers require the denominator/base to have a unit constant term.
template <class R>
Series<R> eval_expr(const EtaExpr& e, R ring, long T) {
  using Kind = EtaExpr::Kind;
  switch (e.kind) {
    case Kind::fk:
      return fk_series(static_cast<long>(e.value), ring, T);
    case Kind::pochhammer:
      return pochhammer_series(static_cast<long>(e.value), static_cast<long>(e.value2), ring, T);
    case Kind::rr:
      return rr_series(ring, T);
    case Kind::q:
      return q_series(ring, T);
    case Kind::literal:
      return constant_series(ring, e.value, T);
    case Kind::add:
      return add(eval_expr(*e.left, ring, T), eval_expr(*e.right, ring, T));
    case Kind::sub:
      return sub(eval_expr(*e.left, ring, T), eval_expr(*e.right, ring, T));
    case Kind::mul:
      return mul(eval_expr(*e.left, ring, T), eval_expr(*e.right, ring, T));
    case Kind::div:
      return mul(eval_expr(*e.left, ring, T), invert(eval_expr(*e.right, ring, T)));
    case Kind::pow:
      return pow(eval_expr(*e.left, ring, T), e.value);
    case Kind::subst:
      return subst_qk(eval_expr(*e.left, ring, T), static_cast<long>(e.value));
  }
  throw std::logic_error("eval_expr: unreachable");
}

}  // namespace qcore
