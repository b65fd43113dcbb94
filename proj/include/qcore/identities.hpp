#pragma once

// Registry of generating-function identities: each entry pairs a left-hand
// procedure (an eta-quotient expression, possibly pushed through a
// dissection pipeline) with a right-hand expression, to be compared
// coefficient-by-coefficient to a truncation order. Exact entries compare
// big integers; modular entries compare residues.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcore/report.hpp"
#include "qcore/series.hpp"

namespace qcore {

enum class IdentityForm { direct, cross_multiplied };

struct Identity {
  std::string id;
  std::string statement;  // human-readable equation
  long default_order = 200;
  IdentityForm form = IdentityForm::direct;
  CoefficientRing ring = CoefficientRing::exact();
  // exactly one pair is set, matching ring.kind
  std::function<ExactSeries(long)> lhs_exact, rhs_exact;
  std::function<ModSeries(long)> lhs_mod, rhs_mod;
};

const std::vector<Identity>& identity_registry();
const Identity* find_identity(std::string_view id);
std::vector<std::string> identity_ids();

/// Evaluates both sides of the registered identity to order T (the entry's
/// default order when T <= 0) and reports equality or the first differing
/// power of q. Throws std::invalid_argument for unknown ids.
VerificationReport verify_identity(std::string_view id, long T = 0);

/// sum A_{t,k}(n) q^n = f_t^{tk} / f_1^k with exact coefficients, cached
/// and grown on demand (thread-safe).
ExactSeries tuple_gf_exact(long t, long k, long T);

/// The same series with every coefficient computed in Z/mZ end-to-end.
ModSeries tuple_gf_mod(long t, long k, std::uint64_t modulus, long T);

/// sum p(n) q^n = 1/f_1 in Z/mZ.
ModSeries partition_gf_mod(std::uint64_t modulus, long T);

}  // namespace qcore
