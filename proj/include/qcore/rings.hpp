#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qcore {

/// Coefficients of the Exact ring: arbitrary-precision integers.
struct ExactRing {
  using value_type = mpz_class;
  static constexpr bool is_modular = false;

  static value_type from_int(long long v) { return mpz_class(static_cast<long>(v)); }
  static std::string to_string(const value_type& v) { return v.get_str(); }

  friend bool operator==(const ExactRing&, const ExactRing&) { return true; }
};

/// Coefficients of Z/mZ, stored as least nonnegative residues.
/// Moduli are limited to [2, 2^63); every modulus in practice is a small
/// prime power p^N.
class ModRing {
 public:
  using value_type = std::uint64_t;
  static constexpr bool is_modular = true;

  explicit ModRing(std::uint64_t modulus) : m_(modulus) {
    if (m_ < 2) throw std::invalid_argument("ModRing: modulus must be >= 2");
    if (m_ > (std::uint64_t{1} << 62)) {
      throw std::invalid_argument("ModRing: modulus too large");
    }
  }

  std::uint64_t modulus() const { return m_; }

  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(m_);
    if (r < 0) r += static_cast<long long>(m_);
    return static_cast<value_type>(r);
  }

  static std::string to_string(value_type v) { return std::to_string(v); }

  friend bool operator==(const ModRing& a, const ModRing& b) { return a.m_ == b.m_; }

 private:
  std::uint64_t m_;
};

/// Runtime ring selector used at API boundaries (CLI, reports).
struct CoefficientRing {
  enum class Kind { exact, mod };
  Kind kind = Kind::exact;
  std::uint64_t modulus = 0;  // meaningful iff kind == mod

  static CoefficientRing exact() { return {Kind::exact, 0}; }
  static CoefficientRing mod(std::uint64_t m) {
    ModRing check(m);  // validates
    return {Kind::mod, check.modulus()};
  }

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};

/// Invokes f with the concrete ring value (ExactRing or ModRing).
template <class F>
decltype(auto) with_ring(const CoefficientRing& ring, F&& f) {
  if (ring.kind == CoefficientRing::Kind::exact) return f(ExactRing{});
  return f(ModRing(ring.modulus));
}

}  // namespace qcore
