#pragma once

// Congruence claims "A_{t,k}(Mn + r) == 0 (mod p^N) for all n" (and the
// classical partition-function analogues), their expansion from theorem
// families, verification against modularly computed coefficients, and a
// miner that searches residue classes for new candidate congruences.

#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "qcore/report.hpp"
#include "qcore/series.hpp"

namespace qcore {

enum class ClaimKind { tuple_cores, partition_function };
enum class ProofStatus { proved, conjecture, classical, mined };

std::string to_string(ProofStatus s);

struct CongruenceClaim {
  ClaimKind kind = ClaimKind::tuple_cores;
  long t = 0;                  // tuple claims: t >= 2
  long long k = 0;             // tuple claims: k >= 1
  long period = 0;             // M
  std::vector<long> residues;  // sorted distinct values in [0, M)
  std::uint64_t prime = 0;     // p
  unsigned exponent = 0;       // N >= 1; modulus = p^N
  ProofStatus status = ProofStatus::conjecture;
  std::string source;
  long max_index = -1;  // largest coefficient index to check; -1 = order-1

  std::uint64_t modulus() const;
  /// Mini-language text, e.g. "A(5,4; 25n+21) % 5^5 == 0".
  std::string canonical() const;

  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

/// Throws std::invalid_argument when the claim is malformed.
void validate_claim(const CongruenceClaim& c);

/// Parses the mini-language: `A(t,k; M n + r1[,r2,...]) % p^N == 0` or
/// `p(M n + r) % p^N == 0`; "^N" optional, plain prime-power moduli accepted.
CongruenceClaim parse_claim(std::string_view text);

// --- quadratic-residue criteria ---

/// r in [1, p-1] with 24r+1 a quadratic nonresidue mod p.
std::vector<long> residues_thm_1_2(std::uint64_t p);
/// r in [1, p-1] with 8r+1 a quadratic nonresidue mod p.
std::vector<long> residues_thm_1_3(std::uint64_t p);
/// The unique r in [1, p-1] with 8r+1 == 0 mod p.
long residue_thm_1_4(std::uint64_t p);

// --- claim families ---

struct FamilyGrid {
  long alpha_max = 3;        // eq-d / eq-f
  long thm11_alpha_max = 2;  // thm-1.1 (family starts at alpha = 1)
  std::vector<std::uint64_t> primes{5, 7, 11, 13};
  unsigned n_max = 2;        // N for thm-1.2 / thm-1.3
  long i_max = 2;            // thm-1.2 / thm-1.3
  long thm14_i_max = 3;
  long cor_i_max = 1;        // cor-1.8 and sec7 families: i in [0, cor_i_max]
  long thm16_i_max = 2;      // thm-1.6 conclusions: i in [1, thm16_i_max]
};

std::vector<std::string> family_ids();

/// Deduplicated claims of one family over the grid. For "thm-1.6" this
/// returns the conclusion claims (see expand_thm_1_6 for the conditional
/// structure). Throws std::invalid_argument for unknown ids.
std::vector<CongruenceClaim> expand_family(std::string_view family_id,
                                           const FamilyGrid& grid = {});

struct Thm16Instance {
  CongruenceClaim hypothesis;
  std::vector<CongruenceClaim> conclusions;
};
std::vector<Thm16Instance> expand_thm_1_6(const FamilyGrid& grid = {});

// --- verification ---

/// Modular series cache keyed (kind, t, k, modulus, order); safe for
/// concurrent readers and computes each entry exactly once.
class SeriesCache {
 public:
  std::shared_ptr<const ModSeries> get(ClaimKind kind, long t, long long k,
                                       std::uint64_t modulus, long T);

 private:
  using Key = std::tuple<int, long, long long, std::uint64_t, long>;
  std::mutex mu_;
  std::map<Key, std::shared_future<std::shared_ptr<const ModSeries>>> entries_;
};

/// Checks every coefficient index <= min(T-1, max_index) in the claim's
/// progressions. Reports the first failing index (as the progression step n)
/// or skips when no index is checkable.
VerificationReport verify_claim(const CongruenceClaim& c, long T, SeriesCache* cache = nullptr);

/// Conditional verification: the hypothesis first, then each conclusion;
/// conclusions are skipped (not failed) when the hypothesis does not verify.
/// Returns the hypothesis report followed by the conclusion reports.
std::vector<VerificationReport> verify_conditional(const Thm16Instance& inst, long T,
                                                   SeriesCache* cache = nullptr);

// --- suites ---

struct SuiteOptions {
  long order = 2000;
  int jobs = 1;
  unsigned seed = 12345;      // selects the exact-arithmetic spot check
  bool exact_spot_check = true;
  FamilyGrid grid;
  SeriesCache* cache = nullptr;  // optional shared cache; internal otherwise
};

std::vector<std::string> suite_ids();

/// Expands every family of the suite with the default grids, verifies each
/// claim, and appends one exact-vs-modular spot check. Deterministic output
/// order regardless of parallelism.
std::vector<VerificationReport> run_suite(std::string_view suite_id,
                                          const SuiteOptions& opts = {});

// --- mining ---

struct MineParams {
  bool partition_mode = false;  // search 1/f1 instead of A_{t,k}
  long t = 5;
  long long k_min = 1, k_max = 4;
  std::vector<long> periods{5, 25};
  std::vector<std::uint64_t> moduli{5, 25, 125};  // prime powers
  long order = 2000;
  long min_hits = 40;
};

struct MinedClaim {
  CongruenceClaim claim;
  long hits = 0;
};

/// Reports every residue class whose checked coefficients (at least
/// min_hits of them) all vanish mod the modulus. Output sorted by
/// (k, period, p, descending N, r).
std::vector<MinedClaim> mine(const MineParams& params);

}  // namespace qcore
