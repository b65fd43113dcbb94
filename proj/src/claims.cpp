#include "qcore/claims.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "qcore/eta.hpp"
#include "qcore/identities.hpp"
#include "qcore/numbers.hpp"

namespace qcore {

std::string to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::proved:
      return "proved";
    case ProofStatus::conjecture:
      return "conjecture";
    case ProofStatus::classical:
      return "classical";
    case ProofStatus::mined:
      return "mined";
  }
  return "?";
}

std::uint64_t CongruenceClaim::modulus() const { return pow_u64(prime, exponent); }

std::string CongruenceClaim::canonical() const {
  std::string s;
  if (kind == ClaimKind::tuple_cores) {
    s = "A(" + std::to_string(t) + "," + std::to_string(k) + "; ";
  } else {
    s = "p(";
  }
  s += std::to_string(period) + "n+";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(residues[i]);
  }
  s += ") % " + std::to_string(prime);
  if (exponent > 1) s += "^" + std::to_string(exponent);
  s += " == 0";
  return s;
}

void validate_claim(const CongruenceClaim& c) {
  if (c.kind == ClaimKind::tuple_cores) {
    if (c.t < 2) throw std::invalid_argument("claim: t must be >= 2");
    if (c.k < 1) throw std::invalid_argument("claim: k must be >= 1");
  }
  if (c.period < 1) throw std::invalid_argument("claim: period must be >= 1");
  if (c.residues.empty()) throw std::invalid_argument("claim: residue set is empty");
  for (long r : c.residues) {
    if (r < 0 || r >= c.period) throw std::invalid_argument("claim: residue out of range");
  }
  if (!std::is_sorted(c.residues.begin(), c.residues.end()) ||
      std::adjacent_find(c.residues.begin(), c.residues.end()) != c.residues.end()) {
    throw std::invalid_argument("claim: residues must be sorted and distinct");
  }
  if (!is_prime(c.prime)) throw std::invalid_argument("claim: modulus base must be prime");
  if (c.exponent < 1) throw std::invalid_argument("claim: modulus exponent must be >= 1");
  pow_u64(c.prime, c.exponent);  // overflow check
}

// --- mini-language parser ---

namespace {

class ClaimParser {
 public:
  explicit ClaimParser(std::string_view s) : s_(s) {}

  CongruenceClaim run() {
    CongruenceClaim c;
    skip_ws();
    if (consume('A')) {
      c.kind = ClaimKind::tuple_cores;
      expect('(');
      c.t = static_cast<long>(uint_lit());
      expect(',');
      c.k = uint_lit();
      expect(';');
    } else if (consume('p')) {
      c.kind = ClaimKind::partition_function;
      expect('(');
    } else {
      fail("expected 'A(t,k; ...)' or 'p(...)'");
    }
    c.period = static_cast<long>(uint_lit());
    skip_ws();
    if (!consume('n')) fail("expected 'n'");
    expect('+');
    c.residues.push_back(static_cast<long>(uint_lit()));
    skip_ws();
    while (consume(',')) {
      c.residues.push_back(static_cast<long>(uint_lit()));
      skip_ws();
    }
    expect(')');
    expect('%');
    const long long base = uint_lit();
    skip_ws();
    if (consume('^')) {
      const long long e = uint_lit();
      if (e < 1 || e > 64) fail("modulus exponent out of range");
      if (!is_prime(static_cast<std::uint64_t>(base))) fail("modulus base must be prime");
      c.prime = static_cast<std::uint64_t>(base);
      c.exponent = static_cast<unsigned>(e);
    } else {
      const auto pp = as_prime_power(static_cast<std::uint64_t>(base));
      if (!pp) fail("modulus must be a prime power");
      c.prime = pp->p;
      c.exponent = pp->n;
    }
    expect('=');
    expect('=');
    skip_ws();
    if (!consume('0')) fail("expected '== 0'");
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");

    std::sort(c.residues.begin(), c.residues.end());
    c.residues.erase(std::unique(c.residues.begin(), c.residues.end()), c.residues.end());
    c.status = ProofStatus::conjecture;
    c.source = "cli";
    validate_claim(c);
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("claim parse error at position " + std::to_string(pos_) + ": " +
                                what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(char ch) {
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    skip_ws();
    if (!consume(ch)) fail(std::string("expected '") + ch + "'");
  }

  long long uint_lit() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected integer");
    }
    long long acc = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const int d = s_[pos_] - '0';
      if (acc > (std::numeric_limits<long long>::max() - d) / 10) fail("integer overflow");
      acc = acc * 10 + d;
      ++pos_;
    }
    return acc;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

CongruenceClaim parse_claim(std::string_view text) { return ClaimParser(text).run(); }

// --- quadratic-residue criteria ---

namespace {

void require_p_at_least_5(std::uint64_t p, const char* who) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": p must be a prime >= 5");
  }
}

}  // namespace

std::vector<long> residues_thm_1_2(std::uint64_t p) {
  require_p_at_least_5(p, "residues_thm_1_2");
  std::vector<long> out;
  for (long r = 1; r < static_cast<long>(p); ++r) {
    if (legendre(24 * r + 1, p) == -1) out.push_back(r);
  }
  return out;
}

std::vector<long> residues_thm_1_3(std::uint64_t p) {
  require_p_at_least_5(p, "residues_thm_1_3");
  std::vector<long> out;
  for (long r = 1; r < static_cast<long>(p); ++r) {
    if (legendre(8 * r + 1, p) == -1) out.push_back(r);
  }
  return out;
}

long residue_thm_1_4(std::uint64_t p) {
  require_p_at_least_5(p, "residue_thm_1_4");
  const auto inv8 = mod_inverse(8 % p, p);
  const std::uint64_t r = (p - 1) * *inv8 % p;  // solves 8r == -1 (mod p)
  return static_cast<long>(r);
}

// --- claim families ---

namespace {

CongruenceClaim tuple_claim(long t, long long k, long period, std::vector<long> residues,
                            std::uint64_t p, unsigned n, ProofStatus status,
                            std::string source) {
  CongruenceClaim c;
  c.kind = ClaimKind::tuple_cores;
  c.t = t;
  c.k = k;
  c.period = period;
  c.residues = std::move(residues);
  c.prime = p;
  c.exponent = n;
  c.status = status;
  c.source = std::move(source);
  validate_claim(c);
  return c;
}

CongruenceClaim partition_claim(long period, long residue, std::uint64_t p,
                                ProofStatus status, std::string source) {
  CongruenceClaim c;
  c.kind = ClaimKind::partition_function;
  c.period = period;
  c.residues = {residue};
  c.prime = p;
  c.exponent = 1;
  c.status = status;
  c.source = std::move(source);
  validate_claim(c);
  return c;
}

void dedup(std::vector<CongruenceClaim>& claims) {
  std::set<std::string> seen;
  std::vector<CongruenceClaim> out;
  for (auto& c : claims) {
    if (seen.insert(c.canonical()).second) out.push_back(std::move(c));
  }
  claims = std::move(out);
}

// The six fixed congruences A_{5,k}(Mn+r) == 0 (mod 5^N).
struct FixedCongruence {
  long long k;
  long period, residue;
  unsigned n;
};
constexpr FixedCongruence kThm15[] = {
    {2, 25, 23, 2}, {2, 125, 123, 3}, {3, 25, 22, 1},
    {3, 125, 122, 2}, {4, 25, 21, 5}, {4, 125, 121, 6},
};

}  // namespace

std::vector<std::string> family_ids() {
  return {"ramanujan-classical", "eq-d", "eq-f", "thm-1.1", "thm-1.2", "thm-1.3",
          "thm-1.4", "thm-1.5", "thm-1.6", "cor-1.8", "sec7-proved", "sec7-conjectures"};
}

std::vector<Thm16Instance> expand_thm_1_6(const FamilyGrid& grid) {
  // Hypotheses: the six fixed congruences plus the alpha = 1 members of the
  // A_{5,2} / A_{5,3} families. Each hypothesis A_{p,k}(p^M n + r) == 0
  // (mod p^N) propagates to k' = p^{M+N-1} i + k with the same progression.
  std::vector<Thm16Instance> out;
  std::vector<CongruenceClaim> hyps;
  for (const auto& f : kThm15) {
    hyps.push_back(tuple_claim(5, f.k, f.period, {f.residue}, 5, f.n, ProofStatus::proved,
                               "thm-1.6 hypothesis (thm-1.5)"));
  }
  hyps.push_back(tuple_claim(5, 2, 5, {3}, 5, 1, ProofStatus::proved, "thm-1.6 hypothesis (eq-d)"));

  for (auto& h : hyps) {
    Thm16Instance inst;
    inst.hypothesis = h;
    unsigned m_exp = 0;  // progression is p^M n + r
    for (long v = h.period; v > 1; v /= static_cast<long>(h.prime)) ++m_exp;
    const long long step = static_cast<long long>(pow_u64(h.prime, m_exp + h.exponent - 1));
    for (long i = 1; i <= grid.thm16_i_max; ++i) {
      inst.conclusions.push_back(tuple_claim(h.t, step * i + h.k, h.period, h.residues, h.prime,
                                             h.exponent, ProofStatus::proved, "thm-1.6"));
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<CongruenceClaim> expand_family(std::string_view family_id, const FamilyGrid& grid) {
  std::vector<CongruenceClaim> claims;
  const std::string fam(family_id);

  if (fam == "ramanujan-classical") {
    claims.push_back(partition_claim(5, 4, 5, ProofStatus::classical, fam));
    claims.push_back(partition_claim(7, 5, 7, ProofStatus::classical, fam));
    claims.push_back(partition_claim(11, 6, 11, ProofStatus::classical, fam));
  } else if (fam == "eq-d" || fam == "eq-f") {
    const long long k = fam == "eq-d" ? 2 : 3;
    for (long alpha = 1; alpha <= grid.alpha_max; ++alpha) {
      const std::uint64_t m = pow_u64(5, static_cast<unsigned>(alpha));
      claims.push_back(tuple_claim(5, k, static_cast<long>(m), {static_cast<long>(m) - k}, 5,
                                   static_cast<unsigned>(alpha), ProofStatus::proved, fam));
    }
  } else if (fam == "thm-1.1") {
    for (long alpha = 1; alpha <= grid.thm11_alpha_max; ++alpha) {
      const long period = static_cast<long>(pow_u64(5, static_cast<unsigned>(alpha + 1)));
      claims.push_back(tuple_claim(5, 4, period, {period - 4}, 5,
                                   static_cast<unsigned>(alpha + 4), ProofStatus::proved, fam));
    }
  } else if (fam == "thm-1.2" || fam == "thm-1.3") {
    const bool is12 = fam == "thm-1.2";
    for (std::uint64_t p : grid.primes) {
      const auto residues = is12 ? residues_thm_1_2(p) : residues_thm_1_3(p);
      for (unsigned n = 1; n <= grid.n_max; ++n) {
        for (long i = 1; i <= grid.i_max; ++i) {
          const long long k =
              static_cast<long long>(pow_u64(p, n)) * i - (is12 ? 1 : 3);
          if (k < 1) continue;
          for (long r : residues) {
            claims.push_back(tuple_claim(static_cast<long>(p), k, static_cast<long>(p), {r}, p,
                                         n, ProofStatus::proved, fam));
          }
        }
      }
    }
  } else if (fam == "thm-1.4") {
    for (std::uint64_t p : grid.primes) {
      const long r = residue_thm_1_4(p);
      for (long i = 1; i <= grid.thm14_i_max; ++i) {
        const long long k = static_cast<long long>(p) * i - 3;
        if (k < 1) continue;
        claims.push_back(tuple_claim(static_cast<long>(p), k, static_cast<long>(p), {r}, p, 1,
                                     ProofStatus::proved, fam));
      }
    }
  } else if (fam == "thm-1.5") {
    for (const auto& f : kThm15) {
      claims.push_back(tuple_claim(5, f.k, f.period, {f.residue}, 5, f.n, ProofStatus::proved, fam));
    }
  } else if (fam == "thm-1.6") {
    for (const auto& inst : expand_thm_1_6(grid)) {
      for (const auto& c : inst.conclusions) claims.push_back(c);
    }
  } else if (fam == "cor-1.8") {
    for (long i = 0; i <= grid.cor_i_max; ++i) {
      const auto add = [&](long long k_base, long long k_step, long period,
                           std::vector<long> residues, unsigned n) {
        claims.push_back(tuple_claim(5, k_step * i + k_base, period, std::move(residues), 5, n,
                                     ProofStatus::proved, fam));
      };
      add(2, 25, 25, {23}, 1);
      add(2, 125, 25, {23}, 2);
      add(2, 3125, 125, {123}, 3);
      add(3, 25, 25, {22}, 1);
      add(3, 625, 125, {122}, 2);
      add(4, 5, 5, {3, 4}, 1);
      add(4, 125, 25, {21}, 2);
      add(4, 25, 25, {21}, 1);
      add(4, 125, 25, {21}, 2);  // listed twice; dedup below
      add(4, 625, 25, {21}, 3);
      add(4, 3125, 25, {21}, 4);
      add(4, 15625, 25, {21}, 5);
      add(4, 390625, 125, {121}, 6);
    }
  } else if (fam == "sec7-proved") {
    const auto add = [&](long long k, long period, std::vector<long> residues, unsigned n) {
      claims.push_back(
          tuple_claim(5, k, period, std::move(residues), 5, n, ProofStatus::proved, fam));
    };
    add(6, 25, {14, 19, 24}, 2);
    add(6, 125, {119}, 3);
    add(7, 25, {13, 18, 23}, 2);
    add(7, 125, {118}, 3);
    for (long i = 0; i <= grid.cor_i_max; ++i) {
      add(25 * i + 6, 25, {14, 19, 24}, 1);
      add(125 * i + 6, 25, {14, 19, 24}, 2);
      add(3125 * i + 6, 125, {119}, 3);
      add(25 * i + 7, 25, {13, 18, 23}, 1);
      add(125 * i + 7, 25, {13, 18, 23}, 2);
      add(3125 * i + 7, 125, {118}, 3);
    }
  } else if (fam == "sec7-conjectures") {
    const auto add = [&](long long k, long period, std::vector<long> residues, unsigned n) {
      claims.push_back(
          tuple_claim(5, k, period, std::move(residues), 5, n, ProofStatus::conjecture, fam));
    };
    for (long i = 0; i <= grid.cor_i_max; ++i) {
      add(5 * i + 1, 25, {24}, 2);
      add(25 * i + 2, 25, {23}, 2);
      add(125 * i + 2, 125, {123}, 3);
      add(125 * i + 3, 125, {122}, 2);
      add(625 * i + 4, 125, {121}, 5);
      add(3125 * i + 4, 125, {121}, 6);
      add(25 * i + 6, 25, {14, 19}, 2);
      add(25 * i + 6, 125, {119}, 3);
      add(25 * i + 7, 25, {13, 18, 23}, 2);
      add(125 * i + 7, 125, {118}, 3);
    }
  } else {
    throw std::invalid_argument("expand_family: unknown family '" + fam + "'");
  }

  dedup(claims);
  return claims;
}

// --- verification ---

std::shared_ptr<const ModSeries> SeriesCache::get(ClaimKind kind, long t, long long k,
                                                  std::uint64_t modulus, long T) {
  if (kind == ClaimKind::partition_function) {
    t = 0;
    k = 0;
  }
  const Key key{static_cast<int>(kind), t, k, modulus, T};
  std::promise<std::shared_ptr<const ModSeries>> prom;
  auto fut = prom.get_future().share();
  bool owner = false;
  {
    std::lock_guard lock(mu_);
    const auto [it, inserted] = entries_.try_emplace(key, fut);
    owner = inserted;
    if (!inserted) fut = it->second;
  }
  if (owner) {
    try {
      auto series = kind == ClaimKind::tuple_cores
                        ? std::make_shared<const ModSeries>(tuple_gf_mod(t, k, modulus, T))
                        : std::make_shared<const ModSeries>(partition_gf_mod(modulus, T));
      prom.set_value(std::move(series));
    } catch (...) {
      prom.set_exception(std::current_exception());
    }
  }
  return fut.get();
}

namespace {

VerificationReport skip_report(const CongruenceClaim& c, std::string reason) {
  VerificationReport r;
  r.id = c.canonical();
  r.kind = "claim";
  r.source = c.source;
  r.proof_status = to_string(c.status);
  r.status = VerifyStatus::skipped;
  r.note = std::move(reason);
  return r;
}

}  // namespace

std::vector<VerificationReport> verify_conditional(const Thm16Instance& inst, long T,
                                                   SeriesCache* cache) {
  std::vector<VerificationReport> out;
  out.push_back(verify_claim(inst.hypothesis, T, cache));
  const bool hypothesis_ok = out.front().status == VerifyStatus::verified;
  for (const auto& c : inst.conclusions) {
    if (hypothesis_ok) {
      out.push_back(verify_claim(c, T, cache));
    } else {
      out.push_back(skip_report(c, "hypothesis not verified: " + inst.hypothesis.canonical()));
    }
  }
  return out;
}

VerificationReport verify_claim(const CongruenceClaim& c, long T, SeriesCache* cache) {
  validate_claim(c);
  if (T < 1) throw std::invalid_argument("verify_claim: order must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.id = c.canonical();
  report.kind = "claim";
  report.source = c.source;
  report.proof_status = to_string(c.status);

  const long bound = c.max_index >= 0 ? std::min(T - 1, c.max_index) : T - 1;
  long checkable = 0;
  for (long r : c.residues) {
    if (r <= bound) checkable += (bound - r) / c.period + 1;
  }
  if (checkable == 0) {
    report.status = VerifyStatus::skipped;
    report.note = "no progression index <= " + std::to_string(bound);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }

  std::shared_ptr<const ModSeries> owned;
  const ModSeries* series = nullptr;
  const std::uint64_t m = c.modulus();
  if (cache != nullptr) {
    owned = cache->get(c.kind, c.t, c.k, m, T);
    series = owned.get();
  } else {
    owned = std::make_shared<const ModSeries>(c.kind == ClaimKind::tuple_cores
                                                  ? tuple_gf_mod(c.t, c.k, m, T)
                                                  : partition_gf_mod(m, T));
    series = owned.get();
  }

  long checked = 0;
  for (long j = 0; j <= bound; ++j) {
    const long r = j % c.period;
    if (!std::binary_search(c.residues.begin(), c.residues.end(), r)) continue;
    ++checked;
    if ((*series)[j] != 0) {
      report.status = VerifyStatus::counterexample;
      report.checked = checked;
      report.failure = FailureInfo{(j - r) / c.period, std::to_string((*series)[j])};
      report.elapsed = std::chrono::steady_clock::now() - start;
      return report;
    }
  }
  report.status = VerifyStatus::verified;
  report.checked = checked;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

// --- suites ---

namespace {

std::vector<std::string> suite_families(std::string_view suite_id) {
  static const std::vector<std::string> proved = {
      "ramanujan-classical", "eq-d",    "eq-f",    "thm-1.1",  "thm-1.2",    "thm-1.3",
      "thm-1.4",             "thm-1.5", "thm-1.6", "cor-1.8",  "sec7-proved"};
  if (suite_id == "paper-proved") return proved;
  if (suite_id == "paper-conjectures") return {"sec7-conjectures"};
  if (suite_id == "general-theorems") return {"thm-1.2", "thm-1.3", "thm-1.4", "thm-1.6"};
  if (suite_id == "paper-all") {
    auto fams = proved;
    fams.push_back("sec7-conjectures");
    return fams;
  }
  throw std::invalid_argument("run_suite: unknown suite '" + std::string(suite_id) + "'");
}

template <class Fn>
void parallel_for(int jobs, std::size_t count, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<std::string> suite_ids() {
  return {"paper-all", "paper-proved", "paper-conjectures", "general-theorems"};
}

std::vector<VerificationReport> run_suite(std::string_view suite_id, const SuiteOptions& opts) {
  struct Item {
    CongruenceClaim claim;
    long hypothesis_slot = -1;  // conclusions wait for this item
  };
  std::vector<Item> items;
  for (const std::string& fam : suite_families(suite_id)) {
    if (fam == "thm-1.6") {
      for (const auto& inst : expand_thm_1_6(opts.grid)) {
        items.push_back({inst.hypothesis, -1});
        const long hyp_slot = static_cast<long>(items.size()) - 1;
        for (const auto& c : inst.conclusions) items.push_back({c, hyp_slot});
      }
    } else {
      for (auto& c : expand_family(fam, opts.grid)) items.push_back({std::move(c), -1});
    }
  }

  std::vector<VerificationReport> reports(items.size());
  SeriesCache local_cache;
  SeriesCache& cache = opts.cache != nullptr ? *opts.cache : local_cache;

  std::vector<std::size_t> phase1, phase2;
  for (std::size_t i = 0; i < items.size(); ++i) {
    (items[i].hypothesis_slot < 0 ? phase1 : phase2).push_back(i);
  }
  parallel_for(opts.jobs, phase1.size(), [&](std::size_t idx) {
    const std::size_t i = phase1[idx];
    reports[i] = verify_claim(items[i].claim, opts.order, &cache);
  });
  parallel_for(opts.jobs, phase2.size(), [&](std::size_t idx) {
    const std::size_t i = phase2[idx];
    const auto& hyp_report = reports[static_cast<std::size_t>(items[i].hypothesis_slot)];
    if (hyp_report.status == VerifyStatus::verified) {
      reports[i] = verify_claim(items[i].claim, opts.order, &cache);
    } else {
      reports[i] = skip_report(items[i].claim, "hypothesis not verified: " + hyp_report.id);
    }
  });

  if (opts.exact_spot_check && !items.empty()) {
    // Recompute one randomly chosen claim's series with exact coefficients
    // and reduce: the modular pipeline must agree on the overlap.
    std::mt19937 rng(opts.seed);
    const auto& picked = items[rng() % items.size()].claim;
    const long spot_order = std::min(opts.order, 400L);
    const std::uint64_t m = picked.modulus();
    ExactSeries exact = picked.kind == ClaimKind::tuple_cores
                            ? tuple_gf_exact(picked.t, picked.k, spot_order)
                            : invert(fk_series(1, ExactRing{}, spot_order));
    const ModSeries reduced = reduce_mod(exact, m);
    const ModSeries direct = picked.kind == ClaimKind::tuple_cores
                                 ? tuple_gf_mod(picked.t, picked.k, m, spot_order)
                                 : partition_gf_mod(m, spot_order);
    VerificationReport r;
    r.id = "exact-spot-check(" + picked.canonical() + ")";
    r.kind = "claim";
    r.source = "modular pipeline vs exact-then-reduce";
    r.proof_status = to_string(picked.status);
    const auto bad = first_mismatch(reduced, direct);
    r.checked = spot_order;
    if (bad) {
      r.status = VerifyStatus::counterexample;
      r.failure = FailureInfo{*bad, std::to_string(direct[*bad])};
    } else {
      r.status = VerifyStatus::verified;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

// --- mining ---

std::vector<MinedClaim> mine(const MineParams& params) {
  if (params.order < 2) throw std::invalid_argument("mine: order must be >= 2");
  if (params.min_hits < 1) throw std::invalid_argument("mine: min_hits must be >= 1");
  if (!params.partition_mode) {
    if (params.t < 2) throw std::invalid_argument("mine: t must be >= 2");
    if (params.k_min < 1 || params.k_max < params.k_min) {
      throw std::invalid_argument("mine: bad k range");
    }
  }
  for (long M : params.periods) {
    if (M < 1) throw std::invalid_argument("mine: periods must be >= 1");
  }
  std::vector<PrimePower> moduli;
  for (std::uint64_t m : params.moduli) {
    const auto pp = as_prime_power(m);
    if (!pp) throw std::invalid_argument("mine: modulus " + std::to_string(m) + " is not a prime power");
    moduli.push_back(*pp);
  }

  SeriesCache cache;
  std::vector<MinedClaim> out;
  const long long k_lo = params.partition_mode ? 0 : params.k_min;
  const long long k_hi = params.partition_mode ? 0 : params.k_max;
  for (long long k = k_lo; k <= k_hi; ++k) {
    for (const PrimePower& pp : moduli) {
      const auto series = cache.get(
          params.partition_mode ? ClaimKind::partition_function : ClaimKind::tuple_cores,
          params.t, k, pp.value, params.order);
      for (long M : params.periods) {
        for (long r = 0; r < M && r < params.order; ++r) {
          const long hits = (params.order - 1 - r) / M + 1;
          if (hits < params.min_hits) continue;
          bool all_zero = true;
          for (long j = r; j < params.order; j += M) {
            if ((*series)[j] != 0) {
              all_zero = false;
              break;
            }
          }
          if (!all_zero) continue;
          CongruenceClaim c;
          c.kind = params.partition_mode ? ClaimKind::partition_function : ClaimKind::tuple_cores;
          c.t = params.partition_mode ? 0 : params.t;
          c.k = k;
          c.period = M;
          c.residues = {r};
          c.prime = pp.p;
          c.exponent = pp.n;
          c.status = ProofStatus::conjecture;
          c.source = "mined";
          out.push_back({std::move(c), hits});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MinedClaim& a, const MinedClaim& b) {
    const auto key = [](const MinedClaim& mc) {
      return std::make_tuple(mc.claim.k, mc.claim.period, mc.claim.prime,
                             -static_cast<long>(mc.claim.exponent), mc.claim.residues.front());
    };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace qcore
