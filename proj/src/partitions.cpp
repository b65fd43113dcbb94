#include "qcore/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcore/eta.hpp"

namespace qcore {

namespace {

void enumerate(long remaining, long max_part, Partition& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (long part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(long n, long cap) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
  if (n > cap) throw std::domain_error("partitions_of: enumeration cap exceeded");
  std::vector<Partition> out;
  Partition prefix;
  enumerate(n, n == 0 ? 1 : n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  Partition out(static_cast<std::size_t>(p.front()), 0);
  for (long part : p) {
    for (long j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return out;
}

std::vector<long> hook_numbers(const Partition& p) {
  const Partition conj = conjugate(p);
  std::vector<long> hooks;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (long j = 0; j < p[i]; ++j) {
      // arm + leg + 1 with 0-based cell (i, j)
      hooks.push_back(p[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<long>(i) - 1);
    }
  }
  return hooks;
}

bool is_t_core(const Partition& p, long t) {
  if (t < 2) throw std::invalid_argument("is_t_core: t must be >= 2");
  for (long h : hook_numbers(p)) {
    if (h % t == 0) return false;
  }
  return true;
}

long count_t_cores(long n, long t, long cap) {
  long count = 0;
  for (const Partition& p : partitions_of(n, cap)) {
    if (is_t_core(p, t)) ++count;
  }
  return count;
}

TupleCountTable tuple_counts_oracle(long t, long k, long maxN, long cap) {
  if (k < 1) throw std::invalid_argument("tuple_counts_oracle: k must be >= 1");
  if (maxN > cap) throw std::domain_error("tuple_counts_oracle: enumeration cap exceeded");
  std::vector<mpz_class> core(static_cast<std::size_t>(maxN) + 1);
  for (long n = 0; n <= maxN; ++n) core[static_cast<std::size_t>(n)] = count_t_cores(n, t, cap);

  std::vector<mpz_class> counts(1, 1);  // k = 0: the empty tuple
  counts.resize(static_cast<std::size_t>(maxN) + 1, 0);
  for (long slot = 0; slot < k; ++slot) {
    std::vector<mpz_class> next(static_cast<std::size_t>(maxN) + 1, 0);
    for (long a = 0; a <= maxN; ++a) {
      if (counts[static_cast<std::size_t>(a)] == 0) continue;
      for (long b = 0; a + b <= maxN; ++b) {
        next[static_cast<std::size_t>(a + b)] +=
            counts[static_cast<std::size_t>(a)] * core[static_cast<std::size_t>(b)];
      }
    }
    counts = std::move(next);
  }
  return {t, k, std::move(counts)};
}

TupleCountTable tuple_counts_gf(long t, long k, long maxN) {
  if (t < 2 || k < 1) throw std::invalid_argument("tuple_counts_gf: need t >= 2, k >= 1");
  const long T = maxN + 1;
  const ExactRing ring;
  auto num = pow(fk_series(t, ring, T), t * k);
  auto den = pow(fk_series(1, ring, T), k);
  auto series = mul(num, invert(den));
  return {t, k, series.coeffs()};
}

namespace {

// Walks every concrete tuple (Lambda_1, ..., Lambda_k); no arithmetic
// shortcuts, so it checks the definition itself rather than the
// convolution identity.
void enumerate_tuples(long slots_left, long remaining,
                      const std::vector<std::vector<Partition>>& cores_by_size,
                      mpz_class& count) {
  if (slots_left == 0) {
    if (remaining == 0) count += 1;
    return;
  }
  for (long size = 0; size <= remaining; ++size) {
    for (std::size_t choice = 0; choice < cores_by_size[static_cast<std::size_t>(size)].size();
         ++choice) {
      enumerate_tuples(slots_left - 1, remaining - size, cores_by_size, count);
    }
  }
}

}  // namespace

mpz_class tuple_count_direct(long t, long k, long n, long cap) {
  if (n > cap) throw std::domain_error("tuple_count_direct: enumeration cap exceeded");
  std::vector<std::vector<Partition>> cores_by_size(static_cast<std::size_t>(n) + 1);
  for (long size = 0; size <= n; ++size) {
    for (const Partition& p : partitions_of(size, cap)) {
      if (is_t_core(p, t)) cores_by_size[static_cast<std::size_t>(size)].push_back(p);
    }
  }
  mpz_class acc = 0;
  enumerate_tuples(k, n, cores_by_size, acc);
  return acc;
}

}  // namespace qcore
