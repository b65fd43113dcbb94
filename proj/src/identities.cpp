#include "qcore/identities.hpp"

#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>

#include "qcore/eta.hpp"
#include "qcore/numbers.hpp"
#include "qcore/recurrence.hpp"

namespace qcore {

namespace {

constexpr ExactRing kExact{};

// Order of the base series needed so that a dissection pipeline still
// delivers T coefficients at the end.
struct Step {
  long p, r;
};

long chain_base_order(long T, std::span<const Step> steps) {
  long S = T;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    S = it->p * (S - 1) + it->r + 1;
  }
  return S;
}

ExactSeries apply_chain(ExactSeries s, std::span<const Step> steps) {
  for (const Step& st : steps) s = dissect(s, st.p, st.r);
  return s;
}

// Evaluator factory for an expression-text side.
std::function<ExactSeries(long)> expr_side(const std::string& text) {
  auto ast = parse_expr(text);
  return [ast](long T) { return eval_expr(*ast, kExact, T); };
}

// Iterated dissection of a cached A_{t,k} generating function.
std::function<ExactSeries(long)> chain_side(long t, long k, std::vector<Step> steps) {
  return [t, k, steps = std::move(steps)](long T) {
    const long base = chain_base_order(T, steps);
    return apply_chain(tuple_gf_exact(t, k, base), steps);
  };
}

}  // namespace

ExactSeries tuple_gf_exact(long t, long k, long T) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, ExactSeries> cache;
  std::lock_guard lock(mu);
  const auto key = std::make_pair(t, k);
  auto it = cache.find(key);
  if (it == cache.end() || it->second.order() < T) {
    const long S = (T + t - 2) / t + 1;  // f_t^{tk} = f_1^{tk} at q -> q^t
    auto num = subst_qk_to(pow(fk_series(1, kExact, S), t * k), t, T);
    auto den = invert(pow(fk_series(1, kExact, T), k));
    it = cache.insert_or_assign(it == cache.end() ? cache.begin() : it, key,
                                mul(num, den));
  }
  return it->second.prefix(T);
}

ModSeries tuple_gf_mod(long t, long k, std::uint64_t modulus, long T) {
  const ModRing ring(modulus);
  const long S = (T + t - 2) / t + 1;
  auto num = subst_qk_to(pow(fk_series(1, ring, S), t * k), t, T);
  auto den = invert(pow(fk_series(1, ring, T), k));
  return mul(num, den);
}

ModSeries partition_gf_mod(std::uint64_t modulus, long T) {
  return invert(fk_series(1, ModRing(modulus), T));
}

namespace {

std::vector<Identity> build_registry() {
  std::vector<Identity> reg;

  const auto add_exact = [&reg](std::string id, std::string statement, long order,
                                std::function<ExactSeries(long)> lhs,
                                std::function<ExactSeries(long)> rhs,
                                IdentityForm form = IdentityForm::direct) {
    Identity ident;
    ident.id = std::move(id);
    ident.statement = std::move(statement);
    ident.default_order = order;
    ident.form = form;
    ident.ring = CoefficientRing::exact();
    ident.lhs_exact = std::move(lhs);
    ident.rhs_exact = std::move(rhs);
    reg.push_back(std::move(ident));
  };

  const auto add_mod = [&reg](std::string id, std::string statement, long order,
                              std::uint64_t modulus, std::function<ModSeries(long)> lhs,
                              std::function<ModSeries(long)> rhs) {
    Identity ident;
    ident.id = std::move(id);
    ident.statement = std::move(statement);
    ident.default_order = order;
    ident.ring = CoefficientRing::mod(modulus);
    ident.lhs_mod = std::move(lhs);
    ident.rhs_mod = std::move(rhs);
    reg.push_back(std::move(ident));
  };

  // --- series representations of f1 ---

  add_exact(
      "pent-f1", "P(1,1) = sum_m (-1)^m q^(m(3m-1)/2)", 200,
      [](long T) { return pochhammer_series(1, 1, kExact, T); },
      [](long T) { return fk_series(1, kExact, T); });

  add_exact(
      "jacobi-f1cubed", "f1^3 = sum_{m>=0} (-1)^m (2m+1) q^(m(m+1)/2)", 500,
      [](long T) { return f1_cubed_series(kExact, T); }, expr_side("f1^3"));

  // --- 5-dissections of 1/f1 and f1 ---

  const std::string rhs_inv_f1 =
      "(f25^5/f5^6) * (1/sub(R,5)^4 + q/sub(R,5)^3 + 2*q^2/sub(R,5)^2 + 3*q^3/sub(R,5)"
      " + 5*q^4 - 3*q^5*sub(R,5) + 2*q^6*sub(R,5)^2 - q^7*sub(R,5)^3 + q^8*sub(R,5)^4)";
  add_exact("dissect-inv-f1", "1/f1 = (f25^5/f5^6) * (1/S^4 + q/S^3 + ... + q^8 S^4), S = R(q^5)",
            200, expr_side("1/f1"), expr_side(rhs_inv_f1));

  // Division-free second check: with N D the numerator/denominator of
  // R(q^5), multiply through by f1 f5^6 N^4 D^4.
  {
    const std::string N = "(P(5,25)*P(20,25))";
    const std::string D = "(P(10,25)*P(15,25))";
    const std::string lhs = "f5^6 * " + N + "^4 * " + D + "^4";
    const std::string rhs = "f1 * f25^5 * (" + D + "^8 + q*" + N + "*" + D + "^7 + 2*q^2*" + N +
                            "^2*" + D + "^6 + 3*q^3*" + N + "^3*" + D + "^5 + 5*q^4*" + N + "^4*" +
                            D + "^4 - 3*q^5*" + N + "^5*" + D + "^3 + 2*q^6*" + N + "^6*" + D +
                            "^2 - q^7*" + N + "^7*" + D + " + q^8*" + N + "^8)";
    add_exact("dissect-inv-f1-xm", "cross-multiplied form of dissect-inv-f1", 200, expr_side(lhs),
              expr_side(rhs), IdentityForm::cross_multiplied);

    add_exact("dissect-f1-xm", "cross-multiplied form of dissect-f1", 200,
              expr_side("f1 * " + N + " * " + D),
              expr_side("f25 * (" + D + "^2 - q*" + N + "*" + D + " - q^2*" + N + "^2)"),
              IdentityForm::cross_multiplied);
  }

  add_exact("dissect-f1", "f1 = f25 * (1/R(q^5) - q - q^2 R(q^5))", 200, expr_side("f1"),
            expr_side("f25 * (1/sub(R,5) - q - q^2*sub(R,5))"));

  add_exact("rr-relation", "1/R^5 - 11q - q^2 R^5 = f1^6/f5^6", 300,
            expr_side("1/R^5 - 11*q - q^2*R^5"), expr_side("f1^6/f5^6"));

  // --- dissection lemmas feeding the A_{5,4} recurrence ---

  add_exact("lemma-P4",
            "[q^(5n+1)] 1/f1^4 = 4 f5^2/f1^6 + 550q f5^8/f1^12 + 12500q^2 f5^14/f1^18"
            " + 78125q^3 f5^20/f1^24",
            200,
            [](long T) {
              const std::vector<Step> steps{{5, 1}};
              return apply_chain(eval_expr(*parse_expr("1/f1^4"), kExact,
                                           chain_base_order(T, steps)),
                                 steps);
            },
            expr_side("4*f5^2/f1^6 + 550*q*f5^8/f1^12 + 12500*q^2*f5^14/f1^18"
                      " + 78125*q^3*f5^20/f1^24"));

  add_exact("lemma-P4-interm",
            "[q^(5n+1)] 1/f1^4 = (f5^20/f1^24)(4/R^15 + 418q/R^10 + 1840q^2/R^5 + 1015q^3"
            " - 1840q^4 R^5 + 418q^5 R^10 - 4q^6 R^15)",
            200,
            [](long T) {
              const std::vector<Step> steps{{5, 1}};
              return apply_chain(eval_expr(*parse_expr("1/f1^4"), kExact,
                                           chain_base_order(T, steps)),
                                 steps);
            },
            expr_side("(f5^20/f1^24) * (4/R^15 + 418*q/R^10 + 1840*q^2/R^5 + 1015*q^3"
                      " - 1840*q^4*R^5 + 418*q^5*R^10 - 4*q^6*R^15)"));

  const auto q54_lemma = [&add_exact](std::string id, const std::string& base,
                                      const std::string& rhs) {
    add_exact(std::move(id), "[q^(5n+4)] " + base + " = " + rhs, 200,
              [ast = parse_expr(base)](long T) {
                const std::vector<Step> steps{{5, 4}};
                return apply_chain(eval_expr(*ast, kExact, chain_base_order(T, steps)), steps);
              },
              expr_side(rhs));
  };
  q54_lemma("lemma-Q4", "f5^2*f1^14", "-15625*q^2*f5^14*f1^2");
  q54_lemma("lemma-Q5", "q*f5^8*f1^8", "-125*q*f5^8*f1^8");
  q54_lemma("lemma-Q6", "q^2*f5^14*f1^2", "-f5^2*f1^14");

  add_exact("eq19",
            "[q^(5n+1)] f5^20/f1^4 = 4 f5^2 f1^14 + 550q f5^8 f1^8 + 12500q^2 f5^14 f1^2"
            " + 78125q^3 f5^20/f1^4",
            200, chain_side(5, 4, {{5, 1}}),
            expr_side("4*f5^2*f1^14 + 550*q*f5^8*f1^8 + 12500*q^2*f5^14*f1^2"
                      " + 78125*q^3*f5^20/f1^4"));

  // Iterated dissection vs the recurrence coefficients (A,B,C,D)_alpha.
  for (long alpha : {1L, 2L}) {
    std::vector<Step> steps{{5, 1}};
    for (long j = 0; j < alpha; ++j) steps.push_back({5, 4});
    add_exact(
        "eq18-alpha-" + std::to_string(alpha),
        "iterated 5-dissection of f5^20/f1^4 equals the recurrence combination at alpha = " +
            std::to_string(alpha),
        60, chain_side(5, 4, std::move(steps)),
        [alpha](long T) {
          const RecurrenceState s = recurrence_table(alpha).back().state;
          auto out = scale(eval_expr(*parse_expr("f5^2*f1^14"), kExact, T), s.A);
          out = add(out, scale(shift(eval_expr(*parse_expr("f5^8*f1^8"), kExact, T), 1), s.B));
          out = add(out, scale(shift(eval_expr(*parse_expr("f5^14*f1^2"), kExact, T), 2), s.C));
          out = add(out, scale(shift(tuple_gf_exact(5, 4, T), 3), s.D));
          return out;
        });
  }

  // --- explicit generating functions behind the fixed congruences ---

  const auto sec5 = [&add_exact](std::string id, long k, std::vector<Step> steps,
                                 const std::string& rhs, const std::string& progression) {
    add_exact(std::move(id), "sum A_{5," + std::to_string(k) + "}(" + progression + ") q^n = " + rhs,
              150, chain_side(5, k, std::move(steps)), expr_side(rhs));
  };
  sec5("sec5-A52-25", 2, {{5, 3}, {5, 4}}, "25*(48*f1^4*f5^4 + 625*q*f5^10/f1^2)", "25n+23");
  sec5("sec5-A52-125", 2, {{5, 3}, {5, 4}, {5, 4}},
       "125*(1202*f1^4*f5^4 + 15625*q*f5^10/f1^2)", "125n+123");
  sec5("sec5-A53-25", 3, {{5, 2}, {5, 4}},
       "5*(5838*f1^9*f5^3 + 233250*q*f1^3*f5^9 + 1953125*q^2*f5^15/f1^3)", "25n+22");
  sec5("sec5-A53-125", 3, {{5, 2}, {5, 4}, {5, 4}},
       "25*(3643791*f1^9*f5^3 + 145754625*q*f1^3*f5^9 + 1220703125*q^2*f5^15/f1^3)", "125n+122");
  sec5("sec5-A54-25", 4, {{5, 1}, {5, 4}},
       "3125*(96*f1^14*f5^2 + 13728*q*f1^8*f5^8 + 312480*q^2*f1^2*f5^14"
       " + 1953125*q^3*f5^20/f1^4)",
       "25n+21");
  sec5("sec5-A54-125", 4, {{5, 1}, {5, 4}, {5, 4}},
       "15625*(1500004*f1^14*f5^2 + 214500550*q*f1^8*f5^8 + 4882512500*q^2*f1^2*f5^14"
       " + 30517578125*q^3*f5^20/f1^4)",
       "125n+121");

  // --- f1^(p^k) == f_p^(p^(k-1)) (mod p^k) ---

  for (long p : {2L, 3L, 5L, 7L}) {
    std::uint64_t pk = 1;
    for (long k = 1; k <= 3; ++k) {
      pk *= static_cast<std::uint64_t>(p);
      add_mod("freshman-p" + std::to_string(p) + "-k" + std::to_string(k),
              "f1^" + std::to_string(pk) + " == f" + std::to_string(p) + "^" +
                  std::to_string(pk / p) + " (mod " + std::to_string(pk) + ")",
              200, pk,
              [pk](long T) { return pow(fk_series(1, ModRing(pk), T), static_cast<long long>(pk)); },
              [p, pk](long T) {
                return pow(fk_series(p, ModRing(pk), T), static_cast<long long>(pk / p));
              });
    }
  }

  // --- congruence propagation: extracting q^(pn+r) from
  //     A_{p,p^N i+k} == f_p^(p^(N-1)(p^2-1) i) * A_{p,k} (mod p^N) ---

  struct Cor2Case {
    long p, N, i, k, r;
  };
  for (const Cor2Case c : {Cor2Case{5, 1, 1, 1, 1}, Cor2Case{5, 1, 1, 2, 2},
                           Cor2Case{5, 2, 1, 2, 3}, Cor2Case{7, 1, 1, 1, 1},
                           Cor2Case{5, 1, 2, 3, 4}, Cor2Case{11, 1, 1, 2, 5}}) {
    const std::uint64_t modulus = pow_u64(static_cast<std::uint64_t>(c.p), static_cast<unsigned>(c.N));
    std::uint64_t pn1 = 1;  // p^(N-1)
    for (long j = 1; j < c.N; ++j) pn1 *= static_cast<std::uint64_t>(c.p);
    const long long big_k = static_cast<long long>(modulus) * c.i + c.k;
    const long long weight = static_cast<long long>(pn1) * (c.p * c.p - 1) * c.i;
    const std::string id = "cor2-sample-p" + std::to_string(c.p) + "N" + std::to_string(c.N) +
                           "i" + std::to_string(c.i) + "k" + std::to_string(c.k) + "r" +
                           std::to_string(c.r);
    add_mod(id,
            "[q^(" + std::to_string(c.p) + "n+" + std::to_string(c.r) + ")] A_{" +
                std::to_string(c.p) + "," + std::to_string(big_k) + "} == f1^" +
                std::to_string(weight) + " * [q^(" + std::to_string(c.p) + "n+" +
                std::to_string(c.r) + ")] A_{" + std::to_string(c.p) + "," + std::to_string(c.k) +
                "} (mod " + std::to_string(modulus) + ")",
            120, modulus,
            [c, modulus, big_k](long T) {
              const long base = c.p * (T - 1) + c.r + 1;
              return dissect(tuple_gf_mod(c.p, big_k, modulus, base), c.p, c.r);
            },
            [c, modulus, weight](long T) {
              const long base = c.p * (T - 1) + c.r + 1;
              auto rhs = dissect(tuple_gf_mod(c.p, c.k, modulus, base), c.p, c.r);
              return mul(pow(fk_series(1, ModRing(modulus), T), weight), rhs);
            });
  }

  return reg;
}

}  // namespace

const std::vector<Identity>& identity_registry() {
  static const std::vector<Identity> reg = build_registry();
  return reg;
}

const Identity* find_identity(std::string_view id) {
  for (const Identity& ident : identity_registry()) {
    if (ident.id == id) return &ident;
  }
  return nullptr;
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const Identity& ident : identity_registry()) ids.push_back(ident.id);
  return ids;
}

VerificationReport verify_identity(std::string_view id, long T) {
  const Identity* ident = find_identity(id);
  if (ident == nullptr) {
    throw std::invalid_argument("verify_identity: unknown identity id '" + std::string(id) + "'");
  }
  const long order = T > 0 ? T : ident->default_order;
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.id = ident->id;
  report.kind = "identity";
  report.source = ident->statement;
  report.proof_status = "proved";

  std::optional<long> bad;
  std::string bad_value;
  long compared = 0;
  if (ident->ring.kind == CoefficientRing::Kind::exact) {
    const ExactSeries lhs = ident->lhs_exact(order);
    const ExactSeries rhs = ident->rhs_exact(order);
    compared = std::min({order, lhs.order(), rhs.order()});
    bad = first_mismatch(lhs, rhs, order);
    if (bad) bad_value = mpz_class(lhs[*bad] - rhs[*bad]).get_str();
  } else {
    const ModSeries lhs = ident->lhs_mod(order);
    const ModSeries rhs = ident->rhs_mod(order);
    compared = std::min({order, lhs.order(), rhs.order()});
    bad = first_mismatch(lhs, rhs, order);
    if (bad) {
      const std::uint64_t m = ident->ring.modulus;
      bad_value = std::to_string((lhs[*bad] + m - rhs[*bad]) % m);
    }
  }
  report.checked = compared;
  if (bad) {
    report.status = VerifyStatus::counterexample;
    report.failure = FailureInfo{*bad, bad_value};
  } else {
    report.status = VerifyStatus::verified;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace qcore
