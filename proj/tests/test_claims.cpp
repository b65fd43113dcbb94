#include <doctest.h>

#include <set>

#include "qcore/claims.hpp"
#include "qcore/numbers.hpp"

using namespace qcore;

TEST_CASE("legendre: examples") {
  CHECK(legendre(4, 5) == 1);
  CHECK(legendre(3, 5) == -1);
  CHECK(legendre(10, 5) == 0);
  CHECK(legendre(-1, 13) == 1);
  CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(legendre(3, 9), std::invalid_argument);
}

TEST_CASE("residue criteria: examples") {
  CHECK(residues_thm_1_2(5) == std::vector<long>{3, 4});
  CHECK(residues_thm_1_3(5) == std::vector<long>{2, 4});
  CHECK(residue_thm_1_4(5) == 3);
  CHECK(residue_thm_1_4(7) == 6);

  // squares mod 7 are {1,2,4}; 24r+1 == 3r+1 must land in {3,5,6}
  CHECK(residues_thm_1_2(7) == std::vector<long>{3, 4, 6});
  CHECK(!residues_thm_1_3(7).empty());

  // the zero class is never a nonresidue
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    for (long r : residues_thm_1_2(p)) CHECK((24 * r + 1) % static_cast<long>(p) != 0);
    for (long r : residues_thm_1_3(p)) CHECK((8 * r + 1) % static_cast<long>(p) != 0);
  }
  CHECK_THROWS_AS(residues_thm_1_2(4), std::invalid_argument);
  CHECK_THROWS_AS(residue_thm_1_4(3), std::invalid_argument);
}

TEST_CASE("residue-set soundness: no pentagonal or triangular value hits an excluded class") {
  for (std::uint64_t p = 5; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    const auto qnr24 = residues_thm_1_2(p);
    const auto qnr8 = residues_thm_1_3(p);
    const long lp = static_cast<long>(p);
    const long inv2 = static_cast<long>(*mod_inverse(2, p));
    for (long m = 0; m < lp; ++m) {
      const long pent = m * (3 * m - 1) % lp * inv2 % lp;
      const long tri = m * (m + 1) % lp * inv2 % lp;
      for (long r : qnr24) CHECK(pent != r);
      for (long r : qnr8) CHECK(tri != r);
    }
  }
}

TEST_CASE("claim canonical text and parser round-trip") {
  CongruenceClaim c;
  c.kind = ClaimKind::tuple_cores;
  c.t = 5;
  c.k = 4;
  c.period = 25;
  c.residues = {21};
  c.prime = 5;
  c.exponent = 5;
  CHECK(c.canonical() == "A(5,4; 25n+21) % 5^5 == 0");
  CHECK(parse_claim(c.canonical()).canonical() == c.canonical());

  CHECK(parse_claim("A(5,6; 25n+14,19,24) % 25 == 0").canonical() ==
        "A(5,6; 25n+14,19,24) % 5^2 == 0");
  CHECK(parse_claim("p(5n+4) % 5 == 0").canonical() == "p(5n+4) % 5 == 0");
  CHECK(parse_claim(" A ( 5 , 2 ;  5 n + 3 ) % 5 == 0 ").canonical() ==
        "A(5,2; 5n+3) % 5 == 0");

  CHECK_THROWS_AS(parse_claim("A(5,2; 5n+7) % 5 == 0"), std::invalid_argument);  // r >= M
  CHECK_THROWS_AS(parse_claim("A(5,2; 5n+1) % 6 == 0"), std::invalid_argument);  // not p^N
  CHECK_THROWS_AS(parse_claim("A(1,2; 5n+1) % 5 == 0"), std::invalid_argument);  // t < 2
  CHECK_THROWS_AS(parse_claim("A(5,2; 5n+1) % 5 == 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_claim("B(5,2; 5n+1) % 5 == 0"), std::invalid_argument);
}

TEST_CASE("expand_family: documented examples") {
  FamilyGrid grid;
  grid.primes = {5};
  grid.n_max = 1;
  grid.i_max = 1;
  const auto thm12 = expand_family("thm-1.2", grid);
  REQUIRE(thm12.size() == 2);
  CHECK(thm12[0].canonical() == "A(5,4; 5n+3) % 5 == 0");
  CHECK(thm12[1].canonical() == "A(5,4; 5n+4) % 5 == 0");

  grid.thm14_i_max = 1;
  const auto thm14 = expand_family("thm-1.4", grid);
  REQUIRE(thm14.size() == 1);
  CHECK(thm14[0].canonical() == "A(5,2; 5n+3) % 5 == 0");

  const auto eqd = expand_family("eq-d");
  REQUIRE(eqd.size() == 3);
  CHECK(eqd[0].canonical() == "A(5,2; 5n+3) % 5 == 0");
  CHECK(eqd[1].canonical() == "A(5,2; 25n+23) % 5^2 == 0");
  CHECK(eqd[2].canonical() == "A(5,2; 125n+123) % 5^3 == 0");

  // thm-1.4 instance coincides with the alpha = 1 member of eq-d
  CHECK(thm14[0].canonical() == eqd[0].canonical());

  CHECK(expand_family("thm-1.5").size() == 6);
  CHECK(expand_family("ramanujan-classical").size() == 3);
  CHECK_THROWS_AS(expand_family("no-such-family"), std::invalid_argument);
}

TEST_CASE("expand_family: cor-1.8 deduplicates the repeated display line") {
  FamilyGrid grid;
  grid.cor_i_max = 1;
  const auto claims = expand_family("cor-1.8", grid);
  CHECK(claims.size() == 24);  // 13 lines with one duplicate, for i = 0 and 1
  std::set<std::string> seen;
  for (const auto& c : claims) CHECK(seen.insert(c.canonical()).second);
}

TEST_CASE("expand_family: thm-1.1 follows its hypothesis alpha >= 1") {
  const auto claims = expand_family("thm-1.1");
  REQUIRE(claims.size() == 2);
  CHECK(claims[0].canonical() == "A(5,4; 25n+21) % 5^5 == 0");
  CHECK(claims[1].canonical() == "A(5,4; 125n+121) % 5^6 == 0");
}

TEST_CASE("verify_claim: checked counts and statuses") {
  SeriesCache cache;
  const auto ok = verify_claim(parse_claim("A(5,2; 5n+3) % 5 == 0"), 2000, &cache);
  CHECK(ok.status == VerifyStatus::verified);
  CHECK(ok.checked == 400);

  const auto big = verify_claim(parse_claim("A(5,4; 25n+21) % 5^5 == 0"), 2000, &cache);
  CHECK(big.status == VerifyStatus::verified);
  CHECK(big.checked == 80);

  const auto bad = verify_claim(parse_claim("A(5,2; 5n+1) % 5 == 0"), 2000, &cache);
  CHECK(bad.status == VerifyStatus::counterexample);
  REQUIRE(bad.failure.has_value());
  CHECK(bad.failure->index == 0);  // A_{5,2}(1) = 2
  CHECK(bad.failure->value == "2");

  const auto ram = verify_claim(parse_claim("p(7n+5) % 7 == 0"), 700, &cache);
  CHECK(ram.status == VerifyStatus::verified);
  CHECK(ram.checked == 100);
}

TEST_CASE("verify_claim: skip semantics") {
  SeriesCache cache;
  auto c = parse_claim("A(5,2; 125n+123) % 5^3 == 0");
  const auto skipped = verify_claim(c, 100, &cache);
  CHECK(skipped.status == VerifyStatus::skipped);
  CHECK(skipped.checked == 0);
  CHECK(!skipped.note.empty());

  c.max_index = 100;  // no progression index below the explicit bound
  const auto bounded = verify_claim(c, 2000, &cache);
  CHECK(bounded.status == VerifyStatus::skipped);

  c.max_index = 123;
  const auto one_index = verify_claim(c, 2000, &cache);
  CHECK(one_index.status == VerifyStatus::verified);
  CHECK(one_index.checked == 1);
}

TEST_CASE("verify_claim: multi-residue first failure reports the right step") {
  SeriesCache cache;
  // A_{5,4}(5n+2) fails immediately at n = 0 (A_{5,4}(2) = 14); residue 3 is fine
  const auto r = verify_claim(parse_claim("A(5,4; 5n+2,3) % 5 == 0"), 500, &cache);
  CHECK(r.status == VerifyStatus::counterexample);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->index == 0);
  CHECK(r.failure->value == "4");  // 14 mod 5
}

TEST_CASE("thm-1.6: conditional verification") {
  SeriesCache cache;
  FamilyGrid grid;
  grid.thm16_i_max = 1;
  const auto instances = expand_thm_1_6(grid);
  REQUIRE(instances.size() == 7);

  // first instance: hypothesis A(5,2; 25n+23) % 5^2, conclusion k = 125i+2
  CHECK(instances[0].hypothesis.canonical() == "A(5,2; 25n+23) % 5^2 == 0");
  REQUIRE(instances[0].conclusions.size() == 1);
  CHECK(instances[0].conclusions[0].canonical() == "A(5,127; 25n+23) % 5^2 == 0");

  const auto reports = verify_conditional(instances[0], 700, &cache);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].status == VerifyStatus::verified);
  CHECK(reports[1].status == VerifyStatus::verified);

  // synthetic false hypothesis: conclusions must be skipped, not failed
  Thm16Instance broken = instances[0];
  broken.hypothesis = parse_claim("A(5,2; 5n+1) % 5 == 0");
  const auto skipped = verify_conditional(broken, 700, &cache);
  REQUIRE(skipped.size() == 2);
  CHECK(skipped[0].status == VerifyStatus::counterexample);
  CHECK(skipped[1].status == VerifyStatus::skipped);
  CHECK(skipped[1].note.find("hypothesis") != std::string::npos);
}

TEST_CASE("run_suite: determinism and parallel equivalence") {
  SuiteOptions opts;
  opts.order = 400;
  const auto a = run_suite("general-theorems", opts);
  const auto b = run_suite("general-theorems", opts);
  CHECK(a == b);

  opts.jobs = 4;
  const auto c = run_suite("general-theorems", opts);
  CHECK(a == c);

  CHECK_THROWS_AS(run_suite("bogus", opts), std::invalid_argument);
}

TEST_CASE("run_suite: paper-proved contains exactly the documented counterexamples") {
  SuiteOptions opts;
  opts.order = 700;
  const auto reports = run_suite("paper-proved", opts);
  std::vector<std::string> failures;
  long skips = 0;
  for (const auto& r : reports) {
    if (r.status == VerifyStatus::counterexample) failures.push_back(r.id);
    if (r.status == VerifyStatus::skipped) ++skips;
  }
  // the three (numerically false) members of the A_{5,3} family
  CHECK(failures == std::vector<std::string>{"A(5,3; 5n+2) % 5 == 0",
                                             "A(5,3; 25n+22) % 5^2 == 0",
                                             "A(5,3; 125n+122) % 5^3 == 0"});
  CHECK(skips == 0);

  // exact spot check is appended and passes
  REQUIRE(!reports.empty());
  CHECK(reports.back().id.rfind("exact-spot-check(", 0) == 0);
  CHECK(reports.back().status == VerifyStatus::verified);
}

TEST_CASE("run_suite: conjecture suite verifies with conjecture status") {
  SuiteOptions opts;
  opts.order = 700;
  const auto reports = run_suite("paper-conjectures", opts);
  CHECK(reports.size() > 10);
  for (const auto& r : reports) {
    CHECK(r.status == VerifyStatus::verified);
    if (r.id.rfind("exact-spot-check(", 0) != 0) CHECK(r.proof_status == "conjecture");
  }
}

TEST_CASE("negative control: perturbed residues fail fast for >= 90% of proved claims") {
  // Over the fixed displayed congruences. The general quadratic-residue
  // families are excluded: their residue sets contain adjacent values, so a
  // +1 shift frequently lands on another member of the same true family.
  SeriesCache cache;
  std::vector<CongruenceClaim> claims;
  for (const char* fam :
       {"ramanujan-classical", "eq-d", "eq-f", "thm-1.1", "thm-1.5", "cor-1.8", "sec7-proved"}) {
    for (auto& c : expand_family(fam)) claims.push_back(std::move(c));
  }
  long perturbed = 0, failed_fast = 0;
  for (auto c : claims) {
    for (long& r : c.residues) r = (r + 1) % c.period;
    std::sort(c.residues.begin(), c.residues.end());
    c.residues.erase(std::unique(c.residues.begin(), c.residues.end()), c.residues.end());
    const auto report = verify_claim(c, 800, &cache);
    if (report.status == VerifyStatus::skipped) continue;
    ++perturbed;
    if (report.status == VerifyStatus::counterexample && report.checked <= 5) ++failed_fast;
  }
  CHECK(perturbed >= 50);
  CHECK(failed_fast * 10 >= perturbed * 9);
}

TEST_CASE("mine: rediscovers known claims and respects thresholds") {
  MineParams params;
  params.t = 5;
  params.k_min = 1;
  params.k_max = 2;
  params.periods = {5};
  params.moduli = {5};
  params.order = 600;
  params.min_hits = 40;
  const auto found = mine(params);
  std::set<std::string> ids;
  for (const auto& mc : found) {
    ids.insert(mc.claim.canonical());
    CHECK(mc.claim.status == ProofStatus::conjecture);
    CHECK(mc.claim.source == "mined");
    CHECK(mc.hits >= 40);
  }
  CHECK(ids.count("A(5,2; 5n+3) % 5 == 0") == 1);
  CHECK(ids.count("A(5,1; 5n+4) % 5 == 0") == 1);
  CHECK(ids.count("A(5,3; 5n+2) % 5 == 0") == 0);  // numerically false, not minable

  params.min_hits = 100000;
  CHECK(mine(params).empty());

  MineParams pf;
  pf.partition_mode = true;
  pf.periods = {5, 7, 11};
  pf.moduli = {5, 7, 11};
  pf.order = 600;
  const auto classics = mine(pf);
  std::set<std::string> cids;
  for (const auto& mc : classics) cids.insert(mc.claim.canonical());
  CHECK(cids.count("p(5n+4) % 5 == 0") == 1);
  CHECK(cids.count("p(7n+5) % 7 == 0") == 1);
  CHECK(cids.count("p(11n+6) % 11 == 0") == 1);

  CHECK_THROWS_AS(mine(MineParams{.moduli = {6}}), std::invalid_argument);
}

TEST_CASE("mine: deterministic ordering") {
  MineParams params;
  params.t = 5;
  params.k_min = 1;
  params.k_max = 4;
  params.periods = {5, 25};
  params.moduli = {5, 25, 125};
  params.order = 600;
  params.min_hits = 20;
  const auto a = mine(params);
  const auto b = mine(params);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].claim == b[i].claim);
    CHECK(a[i].hits == b[i].hits);
  }
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto key = [](const MinedClaim& mc) {
      return std::make_tuple(mc.claim.k, mc.claim.period, mc.claim.prime,
                             -static_cast<long>(mc.claim.exponent),
                             mc.claim.residues.front());
    };
    CHECK(key(a[i - 1]) <= key(a[i]));
  }
}
