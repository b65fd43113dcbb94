// Acceptance suite: executes every acceptance criterion at its stated order
// and prints one PASS/FAIL line per criterion. All checks are exact integer
// or modular comparisons; there are no numerical tolerances anywhere.
//
// Criterion 3 carries a documented expected failure: the quoted A_{5,3}
// family "== 0 (mod 5^alpha)" is numerically false (A_{5,3}(2) = 9), which
// the suite verifies precisely -- the family must fail in exactly the
// analyzed way, and the corrected-strength form (mod 5^(alpha-1)) must
// verify. See the project notes for the full analysis; the criterion line
// is reported as XFAIL and counts as conforming.
//
// Usage: qcore_acceptance [--extended]   (--extended adds the alpha = 4
// checks of criterion 3 at order 5000)

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qcore/claims.hpp"
#include "qcore/eta.hpp"
#include "qcore/identities.hpp"
#include "qcore/numbers.hpp"
#include "qcore/partitions.hpp"
#include "qcore/recurrence.hpp"

using namespace qcore;

namespace {

int g_failures = 0;

void line(const std::string& tag, const std::string& name, bool ok,
          const std::string& detail) {
  std::cout << (ok ? "[PASS] " : ("[" + tag + "] ")) << name;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  std::cout.flush();
  if (!ok) ++g_failures;
}

void criterion(const std::string& name, bool ok, const std::string& detail = "") {
  line("FAIL", name, ok, detail);
}

// Documented expected failure: prints XFAIL and counts as conforming when
// the observed behaviour matches the analysis exactly.
void criterion_xfail(const std::string& name, bool matches_analysis, const std::string& detail) {
  std::cout << (matches_analysis ? "[XFAIL] " : "[FAIL] ") << name << " -- " << detail << "\n";
  std::cout.flush();
  if (!matches_analysis) ++g_failures;
}

bool verified(const VerificationReport& r) { return r.status == VerifyStatus::verified; }

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QCORE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliResult r;
  if (pipe == nullptr) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--extended") extended = true;
  }

  SeriesCache cache;

  // ---- criterion 1: every registered identity verifies at its default order
  {
    bool ok = true;
    std::string first_bad;
    const std::map<std::string, long> pinned_orders = {
        {"dissect-inv-f1", 200}, {"dissect-f1", 200}, {"rr-relation", 300},
        {"lemma-P4", 200},       {"lemma-Q4", 200},   {"lemma-Q5", 200},
        {"lemma-Q6", 200},       {"sec5-A52-25", 150}, {"sec5-A52-125", 150},
        {"sec5-A53-25", 150},    {"sec5-A53-125", 150}, {"sec5-A54-25", 150},
        {"sec5-A54-125", 150}};
    long count = 0;
    for (const auto& id : identity_ids()) {
      const auto report = verify_identity(id);
      ++count;
      if (!verified(report)) {
        ok = false;
        if (first_bad.empty()) first_bad = id;
      }
      const auto pin = pinned_orders.find(id);
      if (pin != pinned_orders.end() && report.checked != pin->second) {
        ok = false;
        first_bad = id + " (order " + std::to_string(report.checked) + ")";
      }
    }
    criterion("criterion 1: identity suite at default orders", ok,
              ok ? std::to_string(count) + " identities equal, big-integer coefficients exact"
                 : "first failure: " + first_bad);
  }

  // ---- criterion 2: oracle equivalence, t in {2,3,5,7}, k <= 4, n <= 15, < 5 s
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (long t : {2L, 3L, 5L, 7L}) {
      for (long k = 1; k <= 4; ++k) {
        const auto oracle = tuple_counts_oracle(t, k, 15);
        const auto gf = tuple_counts_gf(t, k, 15);
        if (oracle.counts != gf.counts) ok = false;
      }
    }
    const double elapsed = seconds_since(t0);
    criterion("criterion 2: brute-force oracle equals generating function",
              ok && elapsed < 5.0,
              "t in {2,3,5,7}, k <= 4, n <= 15, " + std::to_string(elapsed) + "s");
  }

  // ---- criterion 3: the A_{5,2} and A_{5,3} progression families at order 3000
  {
    FamilyGrid grid;
    grid.alpha_max = 3;
    bool ok_d = true;
    std::string detail_d;
    for (const auto& c : expand_family("eq-d", grid)) {
      const auto r = verify_claim(c, 3000, &cache);
      if (!verified(r)) ok_d = false;
      detail_d += r.id + " checked=" + std::to_string(r.checked) + "; ";
    }
    if (extended) {
      CongruenceClaim c4 = expand_family("eq-d", grid).back();
      c4.period = 625;
      c4.residues = {623};
      c4.exponent = 4;
      const auto r = verify_claim(c4, 5000, &cache);
      if (!verified(r)) ok_d = false;
      detail_d += "alpha=4 at order 5000 checked=" + std::to_string(r.checked) + "; ";
    }
    criterion("criterion 3a: A(5,2; 5^a n + 5^a-2) == 0 mod 5^a, a = 1..3" +
                  std::string(extended ? " (+4)" : ""),
              ok_d, detail_d);

    // A_{5,3} branch: documented defect. The family as stated must fail in
    // exactly the analyzed way, and the corrected strength must verify.
    bool matches = true;
    std::string detail_f;
    const char* expected_values[3] = {"4", "15", "25"};
    const auto eqf = expand_family("eq-f", grid);
    for (std::size_t i = 0; i < eqf.size(); ++i) {
      const auto r = verify_claim(eqf[i], 3000, &cache);
      const bool as_analyzed = r.status == VerifyStatus::counterexample && r.failure &&
                               r.failure->index == 0 && r.failure->value == expected_values[i];
      if (!as_analyzed) matches = false;
      detail_f += r.id + " fails at n=0 value=" + (r.failure ? r.failure->value : "?") + "; ";
    }
    // corrected strength 5^(alpha-1) for alpha = 2, 3
    for (unsigned alpha : {2u, 3u}) {
      CongruenceClaim c = eqf[alpha - 1];
      c.exponent = alpha - 1;
      if (!verified(verify_claim(c, 3000, &cache))) matches = false;
    }
    if (extended) {
      CongruenceClaim c4 = eqf.back();
      c4.period = 625;
      c4.residues = {622};
      c4.exponent = 4;
      const auto r = verify_claim(c4, 5000, &cache);
      if (r.status != VerifyStatus::counterexample) matches = false;
      c4.exponent = 3;
      if (!verified(verify_claim(c4, 5000, &cache))) matches = false;
      detail_f += "alpha=4: fails as expected, mod 5^3 verifies; ";
    }
    criterion_xfail("criterion 3b: A(5,3; 5^a n + 5^a-3) == 0 mod 5^a as stated",
                    matches,
                    detail_f + "source statement is numerically false; corrected strength "
                               "mod 5^(a-1) verifies (see notes)");
  }

  // ---- criterion 4: A_{5,4}(5^(a+1) n + 5^(a+1)-4) == 0 mod 5^(a+4)
  {
    bool ok = true;
    std::string detail;
    // paper-strength instances a = 1..3 plus the criterion's literal modulus
    // list 5^4, 5^5, 5^6 (weaker by one power on the same progressions)
    for (unsigned alpha = 1; alpha <= 3; ++alpha) {
      const long period = static_cast<long>(pow_u64(5, alpha + 1));
      CongruenceClaim c;
      c.kind = ClaimKind::tuple_cores;
      c.t = 5;
      c.k = 4;
      c.period = period;
      c.residues = {period - 4};
      c.prime = 5;
      c.exponent = alpha + 4;
      c.status = ProofStatus::proved;
      c.source = "thm-1.1";
      const auto strong = verify_claim(c, 3000, &cache);
      c.exponent = alpha + 3;
      const auto weak = verify_claim(c, 3000, &cache);
      if (!verified(strong) || !verified(weak)) ok = false;
      detail += "a=" + std::to_string(alpha) + ": mod 5^" + std::to_string(alpha + 4) +
                " and 5^" + std::to_string(alpha + 3) + ", checked=" +
                std::to_string(strong.checked) + "; ";
    }
    criterion("criterion 4: A(5,4) family at moduli 5^4..5^7", ok, detail);
  }

  // ---- criterion 5: the six fixed congruences at order 3000
  {
    bool ok = true;
    long checked_25 = 0, checked_125 = 0;
    for (const auto& c : expand_family("thm-1.5")) {
      const auto r = verify_claim(c, 3000, &cache);
      if (!verified(r)) ok = false;
      if (c.canonical() == "A(5,4; 25n+21) % 5^5 == 0") checked_25 = r.checked;
      if (c.canonical() == "A(5,4; 125n+121) % 5^6 == 0") checked_125 = r.checked;
    }
    ok = ok && checked_25 >= 119 && checked_125 >= 23;
    criterion("criterion 5: six fixed congruences incl. mod 3125 and 15625", ok,
              "A(5,4; 25n+21): " + std::to_string(checked_25) + " indices; A(5,4; 125n+121): " +
                  std::to_string(checked_125) + " indices");
  }

  // ---- criterion 6: the general-prime theorems at order 2000 + residue soundness
  {
    bool ok = true;
    std::string first_bad;
    long count = 0;
    for (const char* fam : {"thm-1.2", "thm-1.3", "thm-1.4"}) {
      for (const auto& c : expand_family(fam)) {
        const auto r = verify_claim(c, 2000, &cache);
        ++count;
        if (!verified(r) && first_bad.empty()) {
          ok = false;
          first_bad = r.id;
        }
      }
    }
    bool sound = true;
    for (std::uint64_t p = 5; p <= 97; ++p) {
      if (!is_prime(p)) continue;
      const auto qnr24 = residues_thm_1_2(p);
      const auto qnr8 = residues_thm_1_3(p);
      const std::set<long> s24(qnr24.begin(), qnr24.end());
      const std::set<long> s8(qnr8.begin(), qnr8.end());
      const long lp = static_cast<long>(p);
      const long inv2 = static_cast<long>(*mod_inverse(2, p));
      for (long m = 0; m < lp; ++m) {
        if (s24.count(m * (3 * m - 1) % lp * inv2 % lp) != 0) sound = false;
        if (s8.count(m * (m + 1) % lp * inv2 % lp) != 0) sound = false;
      }
    }
    criterion("criterion 6: general theorems p in {5,7,11,13}, N <= 2, i <= 2 + soundness",
              ok && sound,
              ok ? std::to_string(count) + " claims at order 2000; residue sets sound for p <= 97"
                 : "first failure: " + first_bad);
  }

  // ---- criterion 7: cor-1.8 and the further proved congruences, i in {0,1}
  {
    bool ok = true;
    std::string first_bad;
    long count = 0;
    for (const char* fam : {"cor-1.8", "sec7-proved"}) {
      for (const auto& c : expand_family(fam)) {
        const auto r = verify_claim(c, 3000, &cache);
        ++count;
        if (!verified(r) && first_bad.empty()) {
          ok = false;
          first_bad = r.id;
        }
      }
    }
    criterion("criterion 7: corollary families and further congruences, i in {0,1}", ok,
              ok ? std::to_string(count) + " claims at order 3000"
                 : "first failure: " + first_bad);
  }

  // ---- criterion 8: the ten conjectures, verified-to-bound, flagged conjecture
  {
    bool ok = true;
    long count = 0;
    for (const auto& c : expand_family("sec7-conjectures")) {
      const auto r = verify_claim(c, 3000, &cache);
      ++count;
      if (!verified(r) || r.proof_status != "conjecture") ok = false;
    }
    criterion("criterion 8: conjectured congruences verified-to-bound, status=conjecture", ok,
              std::to_string(count) + " claims at order 3000, none claimed proved");
  }

  // ---- criterion 9: recurrence table valuations
  {
    const auto rows = recurrence_table(12);
    bool ok = rows.size() == 13;
    mpz_class d = 78125;
    for (const auto& row : rows) {
      if (row.state.alpha >= 1 && !row.theorem_bound_ok) ok = false;
      if (row.state.D != d) ok = false;
      d *= 78125;
    }
    const bool b_flagged = rows[1].nuB == 5 && !rows[1].paper_display_ok &&
                           rows[1].theorem_bound_ok;
    criterion("criterion 9: recurrence valuations >= a+4, D = 5^(7(a+1)), B-column flag",
              ok && b_flagged,
              "nu5(B_1) = 5 < 6: displayed bound overstated, theorem bound still holds");
  }

  // ---- criterion 10: iterated dissection equals the recurrence form at order 60
  {
    const auto r = verify_identity("eq18-alpha-1", 60);
    criterion("criterion 10: dissection vs recurrence cross-check at order 60", verified(r),
              "checked=" + std::to_string(r.checked));
  }

  // ---- criterion 11: the miner rediscovers the in-box congruences
  {
    const auto t0 = std::chrono::steady_clock::now();
    MineParams box;
    box.t = 5;
    box.k_min = 1;
    box.k_max = 7;
    box.periods = {5, 25};
    box.moduli = {5, 25, 125};
    box.order = 2000;
    box.min_hits = 40;
    std::set<std::string> mined_ids;
    for (const auto& mc : mine(box)) mined_ids.insert(mc.claim.canonical());

    MineParams classics;
    classics.partition_mode = true;
    classics.periods = {5, 7, 11};
    classics.moduli = {5, 7, 11};
    classics.order = 2000;
    classics.min_hits = 40;
    for (const auto& mc : mine(classics)) mined_ids.insert(mc.claim.canonical());

    // the proved-suite claims inside the box, split into single residues
    std::vector<CongruenceClaim> box_claims;
    for (const char* fam : {"ramanujan-classical", "eq-d", "eq-f", "thm-1.1", "thm-1.2",
                            "thm-1.3", "thm-1.4", "thm-1.5", "thm-1.6", "cor-1.8",
                            "sec7-proved"}) {
      for (const auto& c : expand_family(fam)) {
        if (c.kind == ClaimKind::tuple_cores) {
          if (c.t != 5 || c.k > 7 || c.period > 25 || c.modulus() > 125) continue;
        }
        for (long r : c.residues) {
          CongruenceClaim single = c;
          single.residues = {r};
          box_claims.push_back(std::move(single));
        }
      }
    }

    bool ok = true;
    std::vector<std::string> missing, false_in_box;
    for (const auto& c : box_claims) {
      if (mined_ids.count(c.canonical()) != 0) continue;
      // a claim the miner cannot find must itself be false, and the only
      // such claims are the two documented A_{5,3} family members
      if (verify_claim(c, 2000, &cache).status == VerifyStatus::counterexample) {
        false_in_box.push_back(c.canonical());
      } else {
        ok = false;
        missing.push_back(c.canonical());
      }
    }
    const double elapsed = seconds_since(t0);
    ok = ok && elapsed < 180.0 &&
         false_in_box == std::vector<std::string>{"A(5,3; 5n+2) % 5 == 0",
                                                  "A(5,3; 25n+22) % 5^2 == 0"};
    std::string detail = std::to_string(mined_ids.size()) + " mined classes cover " +
                         std::to_string(box_claims.size() - false_in_box.size()) +
                         " true in-box claims + 3 classics, " + std::to_string(elapsed) + "s";
    if (!missing.empty()) detail += "; MISSING: " + missing.front();
    detail += "; 2 documented-false claims excluded (see criterion 3b)";
    criterion("criterion 11: miner rediscovers every true in-box congruence", ok, detail);
  }

  // ---- flagship run: the whole claim registry through the suite runner
  {
    SuiteOptions opts;
    opts.order = 3000;
    opts.cache = &cache;
    const auto reports = run_suite("paper-all", opts);
    std::vector<std::string> failures;
    long verified_count = 0, skipped = 0;
    bool statuses_ok = true;
    for (const auto& r : reports) {
      switch (r.status) {
        case VerifyStatus::verified:
          ++verified_count;
          break;
        case VerifyStatus::counterexample:
          failures.push_back(r.id);
          break;
        case VerifyStatus::skipped:
          ++skipped;
          break;
      }
      if (r.source == "sec7-conjectures" && r.proof_status != "conjecture") statuses_ok = false;
      if (r.source == "ramanujan-classical" && r.proof_status != "classical") statuses_ok = false;
    }
    const bool ok = statuses_ok && skipped == 0 && !reports.empty() &&
                    reports.back().status == VerifyStatus::verified &&
                    failures == std::vector<std::string>{"A(5,3; 5n+2) % 5 == 0",
                                                         "A(5,3; 25n+22) % 5^2 == 0",
                                                         "A(5,3; 125n+122) % 5^3 == 0"};
    criterion("flagship: run_suite(paper-all) at order 3000", ok,
              std::to_string(verified_count) +
                  " verified incl. exact spot check; the only counterexamples are the three "
                  "documented A(5,3) family members");
  }

  // ---- criterion 12: negative controls through the CLI
  {
    // frozen from the enumeration oracle: A_{5,4}(22) = 397812 == 937 (mod 3125)
    const auto oracle = tuple_counts_oracle(5, 4, 22);
    bool ok = oracle.counts[22] == 397812 && oracle.counts[22] % 3125 == 937;

    struct Control {
      const char* claim;
      const char* value;
    };
    const Control controls[] = {
        {"A(5,2; 5n+1) % 5 == 0", "value=2"},
        {"p(5n+3) % 5 == 0", "value=3"},
        {"A(5,4; 25n+22) % 5^5 == 0", "value=937"},
    };
    std::string detail;
    for (const auto& control : controls) {
      const auto r = run_cli("verify claim '" + std::string(control.claim) + "' --order 2000");
      const bool this_ok = r.exit_code == 1 && r.out.find("n=0") != std::string::npos &&
                           r.out.find(control.value) != std::string::npos;
      if (!this_ok) ok = false;
      detail += std::string(control.claim) + " -> exit 1 at n=0 " + control.value + "; ";
    }
    criterion("criterion 12: falsified claims exit 1 with documented first failures", ok, detail);
  }

  std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria conform (criterion 3b is a "
                                  "documented expected failure of the source statement)"
                                : "ACCEPTANCE: " + std::to_string(g_failures) + " criteria failed")
            << "\n";
  return g_failures == 0 ? 0 : 1;
}
