#pragma once

// Brute-force partition combinatorics, independent of the series machinery.
// This is the oracle the generating functions are validated against: it
// counts t-cores and k-tuples of t-cores straight from hook numbers.

#include <vector>

#include <gmpxx.h>

namespace qcore {

/// Weakly decreasing sequence of positive integers.
using Partition = std::vector<long>;

/// Enumeration guard: partitions_of(n) refuses n above the cap.
inline constexpr long kDefaultEnumerationCap = 40;

/// All partitions of n in ascending lexicographic order; p(0) = 1 (the
/// empty partition). Throws std::domain_error above the cap.
std::vector<Partition> partitions_of(long n, long cap = kDefaultEnumerationCap);

/// Conjugate partition via column counts.
Partition conjugate(const Partition& p);

/// Hook numbers of every cell of the Ferrers-Young diagram, one entry per
/// cell (a multiset; unsorted).
std::vector<long> hook_numbers(const Partition& p);

/// True iff no hook number is divisible by t. Requires t >= 2.
bool is_t_core(const Partition& p, long t);

/// Number of t-core partitions of n, by direct filtering.
long count_t_cores(long n, long t, long cap = kDefaultEnumerationCap);

struct TupleCountTable {
  long t = 0;
  long k = 0;
  std::vector<mpz_class> counts;  // counts[n] = A_{t,k}(n)
};

/// A_{t,k}(n) for n <= maxN as the k-fold convolution of the t-core counts.
TupleCountTable tuple_counts_oracle(long t, long k, long maxN, long cap = kDefaultEnumerationCap);

/// A_{t,k}(n) for n <= maxN from the generating function f_t^{tk} / f_1^k,
/// exact coefficients.
TupleCountTable tuple_counts_gf(long t, long k, long maxN);

/// A_{t,k}(n) by literally enumerating k-tuples of partitions and filtering
/// each component's hooks. Exponential; intended for n <= 8, k <= 3 as a
/// cross-check of the convolution route.
mpz_class tuple_count_direct(long t, long k, long n, long cap = kDefaultEnumerationCap);

}  // namespace qcore
