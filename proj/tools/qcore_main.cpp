// qcore -- exact q-series calculator and congruence verifier.
//
// Commands:
//   coeff        print coefficients of an eta-quotient expression
//   verify       check a registered identity, a single claim, or a suite
//   mine         search residue classes for candidate congruences
//   recurrence   print the (A,B,C,D) dissection-coefficient table
//   oracle-check cross-validate generating functions against enumeration
//
// Exit codes: 0 success / all verified; 1 counterexample (or skips without
// --allow-skip, or oracle mismatch); 2 usage, parse, or evaluation errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcore/claims.hpp"
#include "qcore/eta.hpp"
#include "qcore/identities.hpp"
#include "qcore/partitions.hpp"
#include "qcore/recurrence.hpp"
#include "qcore/report.hpp"

namespace {

using nlohmann::json;
using namespace qcore;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long default_order() {
  if (const char* env = std::getenv("QCORE_ORDER")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return v;
    } catch (...) {
    }
    throw UsageError("QCORE_ORDER must be a positive integer");
  }
  return 2000;
}

struct Flags {
  std::vector<std::string> positional;
  std::optional<long> order;
  std::optional<long> max;
  std::optional<long> from, to;
  std::optional<std::uint64_t> mod;
  std::optional<long> alpha_max;
  std::optional<long> min_hits;
  std::optional<long> max_n;
  std::optional<long> cap;
  std::optional<long long> k_min, k_max;
  std::optional<long> t;
  std::optional<long> i_max;
  std::optional<long> n_max;
  std::vector<std::uint64_t> primes;
  std::vector<long> periods;
  std::vector<std::uint64_t> moduli;
  int jobs = 1;
  unsigned seed = 12345;
  bool json_out = false;
  bool allow_skip = false;
  bool verbose = false;
  bool partitions = false;
};

long parse_long(const std::string& flag, const std::string& value) {
  try {
    std::size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw UsageError("bad value for " + flag + ": '" + value + "'");
  }
}

std::vector<long> parse_list(const std::string& flag, const std::string& value) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t comma = value.find(',', start);
    const std::string item = value.substr(start, comma == std::string::npos ? comma : comma - start);
    if (item.empty()) throw UsageError("bad list for " + flag);
    out.push_back(parse_long(flag, item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw UsageError("empty list for " + flag);
  return out;
}

Flags parse_flags(const std::vector<std::string>& args) {
  Flags f;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const auto value = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw UsageError("missing value for " + a);
      return args[++i];
    };
    if (a == "--json") {
      f.json_out = true;
    } else if (a == "--allow-skip") {
      f.allow_skip = true;
    } else if (a == "--verbose") {
      f.verbose = true;
    } else if (a == "--partitions") {
      f.partitions = true;
    } else if (a == "--order") {
      f.order = parse_long(a, value());
    } else if (a == "--max") {
      f.max = parse_long(a, value());
    } else if (a == "--from") {
      f.from = parse_long(a, value());
    } else if (a == "--to") {
      f.to = parse_long(a, value());
    } else if (a == "--mod") {
      f.mod = static_cast<std::uint64_t>(parse_long(a, value()));
    } else if (a == "--alpha-max") {
      f.alpha_max = parse_long(a, value());
    } else if (a == "--min-hits") {
      f.min_hits = parse_long(a, value());
    } else if (a == "--max-n") {
      f.max_n = parse_long(a, value());
    } else if (a == "--cap") {
      f.cap = parse_long(a, value());
    } else if (a == "--t") {
      f.t = parse_long(a, value());
    } else if (a == "--k") {
      const std::string v = value();
      const std::size_t dots = v.find("..");
      if (dots == std::string::npos) {
        f.k_min = f.k_max = parse_long(a, v);
      } else {
        f.k_min = parse_long(a, v.substr(0, dots));
        f.k_max = parse_long(a, v.substr(dots + 2));
      }
    } else if (a == "--i-max") {
      f.i_max = parse_long(a, value());
    } else if (a == "--n-max") {
      f.n_max = parse_long(a, value());
    } else if (a == "--primes") {
      for (long p : parse_list(a, value())) f.primes.push_back(static_cast<std::uint64_t>(p));
    } else if (a == "--periods") {
      f.periods = parse_list(a, value());
    } else if (a == "--moduli") {
      for (long m : parse_list(a, value())) f.moduli.push_back(static_cast<std::uint64_t>(m));
    } else if (a == "--jobs") {
      f.jobs = static_cast<int>(parse_long(a, value()));
      if (f.jobs < 1) throw UsageError("--jobs must be >= 1");
    } else if (a == "--seed") {
      f.seed = static_cast<unsigned>(parse_long(a, value()));
    } else if (a.rfind("--", 0) == 0) {
      throw UsageError("unknown flag " + a);
    } else {
      f.positional.push_back(a);
    }
  }
  return f;
}

void print_usage() {
  std::cout <<
      R"(qcore -- exact q-series calculator and congruence verifier

Usage: qcore <command> [options]

Commands:
  coeff <expr>             Print coefficients of an eta-quotient expression.
                           Options: --max N | --from A --to B, --order T,
                           --mod M (modular ring instead of exact), --json
  verify identity <id|all> Check one registered identity (or all of them).
  verify claim "<claim>"   Check a congruence claim, e.g.
                           "A(5,4; 25n+21) % 5^5 == 0" or "p(5n+4) % 5 == 0".
  verify suite <id>        Run a claim suite: paper-all | paper-proved |
                           paper-conjectures | general-theorems.
                           Options: --order T, --jobs N, --seed S,
                           --allow-skip, --json, --verbose; family grids
                           widen with --alpha-max A, --i-max I, --n-max N,
                           --primes 5,7,11,13
  mine                     Search for vanishing residue classes.
                           Options: --t T --k A..B | --partitions,
                           --periods 5,25 --moduli 5,25,125 --order T
                           --min-hits H --json
  recurrence               Print the dissection-coefficient table with 5-adic
                           valuations. Options: --alpha-max A, --json
  oracle-check             Cross-validate series coefficients against
                           brute-force partition enumeration.
                           Options: --max-n N, --cap C, --json

The default truncation order is 2000; override with --order or QCORE_ORDER.
)";
}

// --- coeff ---

int cmd_coeff(const Flags& f) {
  if (f.positional.size() != 1) throw UsageError("coeff expects exactly one expression");
  long from = 0, to;
  if (f.max) {
    to = *f.max;
  } else if (f.from || f.to) {
    from = f.from.value_or(0);
    to = f.to.value_or(from);
  } else {
    to = std::min((f.order ? *f.order : default_order()) - 1, 10L);
  }
  if (from < 0 || to < from) throw UsageError("coeff: bad range");
  const long T = std::max(f.order ? *f.order : 0L, to + 1);

  EtaExprPtr expr;
  try {
    expr = parse_expr(f.positional[0]);
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return 2;
  }
  const CoefficientRing ring = f.mod ? CoefficientRing::mod(*f.mod) : CoefficientRing::exact();

  std::vector<std::string> values;
  with_ring(ring, [&](auto r) {
    const auto series = eval_expr(*expr, r, T);
    for (long n = from; n <= to; ++n) {
      values.push_back(decltype(r)::to_string(series[n]));
    }
  });

  if (f.json_out) {
    json doc{{"expr", f.positional[0]}, {"order", T}, {"from", from}, {"coefficients", values}};
    if (f.mod) {
      doc["ring"] = {{"kind", "mod"}, {"modulus", *f.mod}};
    } else {
      doc["ring"] = {{"kind", "exact"}};
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << from + static_cast<long>(i) << "\t" << values[i] << "\n";
    }
  }
  return 0;
}

// --- verify ---

int report_exit_code(const std::vector<VerificationReport>& reports, bool allow_skip) {
  bool any_skip = false;
  for (const auto& r : reports) {
    if (r.status == VerifyStatus::counterexample) return 1;
    if (r.status == VerifyStatus::skipped) any_skip = true;
  }
  return any_skip && !allow_skip ? 1 : 0;
}

void emit_reports(const Flags& f, const std::string& suite, long order,
                  const std::vector<VerificationReport>& reports) {
  if (f.json_out) {
    std::cout << reports_to_json(suite, order, reports).dump(2) << "\n";
    return;
  }
  long verified = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    std::cout << report_text_line(r, f.verbose) << "\n";
    switch (r.status) {
      case VerifyStatus::verified:
        ++verified;
        break;
      case VerifyStatus::counterexample:
        ++failed;
        break;
      case VerifyStatus::skipped:
        ++skipped;
        break;
    }
  }
  std::cout << "summary: " << verified << " verified, " << failed << " counterexamples, "
            << skipped << " skipped ";
  if (order > 0) {
    std::cout << "(order " << order << ")\n";
  } else {
    std::cout << "(registry default orders)\n";
  }
}

int cmd_verify(const Flags& f) {
  if (f.positional.size() != 2) {
    throw UsageError("verify expects: verify {identity|claim|suite} <target>");
  }
  const std::string& what = f.positional[0];
  const std::string& target = f.positional[1];
  // 0 = per-identity registry defaults (identities carry their own orders)
  const long order = f.order ? *f.order : (what == "identity" ? 0 : default_order());
  std::vector<VerificationReport> reports;
  std::string suite;

  if (what == "identity") {
    if (target == "all") {
      for (const std::string& id : identity_ids()) {
        if (f.verbose) std::cerr << "verifying " << id << "...\n";
        reports.push_back(verify_identity(id, order));
      }
    } else {
      reports.push_back(verify_identity(target, order));
    }
  } else if (what == "claim") {
    const CongruenceClaim claim = parse_claim(target);
    if (f.verbose) {
      std::cerr << "progression indices:";
      for (long r : claim.residues) {
        for (long j = r, shown = 0; j < order && shown < 4; j += claim.period, ++shown) {
          std::cerr << " " << j;
        }
        std::cerr << " ...";
      }
      std::cerr << "\n";
    }
    reports.push_back(verify_claim(claim, order));
  } else if (what == "suite") {
    SuiteOptions opts;
    opts.order = order;
    opts.jobs = f.jobs;
    opts.seed = f.seed;
    if (f.alpha_max) opts.grid.alpha_max = *f.alpha_max;
    if (f.n_max) {
      if (*f.n_max < 1) throw UsageError("--n-max must be >= 1");
      opts.grid.n_max = static_cast<unsigned>(*f.n_max);
    }
    if (f.i_max) {
      if (*f.i_max < 1) throw UsageError("--i-max must be >= 1");
      opts.grid.i_max = *f.i_max;
      opts.grid.thm14_i_max = *f.i_max;
      opts.grid.thm16_i_max = *f.i_max;
      opts.grid.cor_i_max = *f.i_max;
    }
    if (!f.primes.empty()) opts.grid.primes = f.primes;
    suite = target;
    reports = run_suite(target, opts);
  } else {
    throw UsageError("verify: unknown target kind '" + what + "'");
  }

  emit_reports(f, suite, order, reports);
  return report_exit_code(reports, f.allow_skip);
}

// --- mine ---

int cmd_mine(const Flags& f) {
  MineParams params;
  params.partition_mode = f.partitions;
  if (f.t) params.t = *f.t;
  if (f.k_min) params.k_min = *f.k_min;
  if (f.k_max) params.k_max = *f.k_max;
  if (!f.periods.empty()) params.periods = f.periods;
  if (!f.moduli.empty()) params.moduli = f.moduli;
  params.order = f.order ? *f.order : default_order();
  if (f.min_hits) params.min_hits = *f.min_hits;

  const auto mined = mine(params);
  if (f.json_out) {
    json arr = json::array();
    for (const auto& mc : mined) {
      json j{{"claim", mc.claim.canonical()},
             {"period", mc.claim.period},
             {"residue", mc.claim.residues.front()},
             {"modulus", mc.claim.modulus()},
             {"hits", mc.hits},
             {"status", to_string(mc.claim.status)},
             {"source", mc.claim.source}};
      if (mc.claim.kind == ClaimKind::tuple_cores) {
        j["t"] = mc.claim.t;
        j["k"] = mc.claim.k;
      } else {
        j["series"] = "p";
      }
      arr.push_back(std::move(j));
    }
    std::cout << json{{"order", params.order}, {"min_hits", params.min_hits}, {"claims", arr}}.dump(2)
              << "\n";
  } else {
    for (const auto& mc : mined) {
      std::cout << mc.claim.canonical() << "\thits=" << mc.hits << "\n";
    }
    std::cout << "mined " << mined.size() << " candidate congruence(s)\n";
  }
  return 0;
}

// --- recurrence ---

int cmd_recurrence(const Flags& f) {
  const long alpha_max = f.alpha_max ? *f.alpha_max : 12;
  const auto rows = recurrence_table(alpha_max);
  const auto nu_str = [](const std::optional<long>& v) {
    return v ? std::to_string(*v) : std::string("inf");
  };
  if (f.json_out) {
    json arr = json::array();
    for (const auto& row : rows) {
      arr.push_back(json{{"alpha", row.state.alpha},
                         {"A", row.state.A.get_str()},
                         {"B", row.state.B.get_str()},
                         {"C", row.state.C.get_str()},
                         {"D", row.state.D.get_str()},
                         {"nu5", json{{"A", nu_str(row.nuA)},
                                      {"B", nu_str(row.nuB)},
                                      {"C", nu_str(row.nuC)},
                                      {"D", nu_str(row.nuD)}}},
                         {"theorem_bound_ok", row.theorem_bound_ok},
                         {"paper_display_ok", row.paper_display_ok}});
    }
    std::cout << json{{"alpha_max", alpha_max}, {"rows", arr}}.dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      std::cout << "alpha=" << row.state.alpha << "  A=" << row.state.A.get_str()
                << "  B=" << row.state.B.get_str() << "  C=" << row.state.C.get_str()
                << "  D=" << row.state.D.get_str() << "\n"
                << "         nu5(A)=" << nu_str(row.nuA) << " nu5(B)=" << nu_str(row.nuB)
                << " nu5(C)=" << nu_str(row.nuC) << " nu5(D)=" << nu_str(row.nuD)
                << "  theorem_bound_ok=" << (row.theorem_bound_ok ? "yes" : "no")
                << "  paper_display_ok=" << (row.paper_display_ok ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

// --- oracle-check ---

int cmd_oracle_check(const Flags& f) {
  const long max_n = f.max_n ? *f.max_n : 15;
  const long cap = f.cap ? *f.cap : kDefaultEnumerationCap;
  bool ok = true;
  std::vector<std::string> lines;
  const auto check = [&](const std::string& name, bool pass) {
    lines.push_back((pass ? "[PASS] " : "[FAIL] ") + name);
    ok = ok && pass;
  };

  // p(n) from enumeration vs 1/f1
  {
    const long n_max = std::min({cap, 30L});
    const auto inv_f1 = invert(fk_series(1, ExactRing{}, n_max + 1));
    bool pass = true;
    for (long n = 0; n <= n_max; ++n) {
      if (inv_f1[n] != static_cast<long>(partitions_of(n, cap).size())) pass = false;
    }
    check("p(n) enumeration matches 1/f1 for n <= " + std::to_string(n_max), pass);
  }

  // A_{t,k} oracle vs generating function
  for (long t : {2L, 3L, 5L, 7L}) {
    bool pass = true;
    for (long k = 1; k <= 4; ++k) {
      const auto oracle = tuple_counts_oracle(t, k, max_n, cap);
      const auto gf = tuple_counts_gf(t, k, max_n);
      for (long n = 0; n <= max_n; ++n) {
        if (oracle.counts[static_cast<std::size_t>(n)] != gf.counts[static_cast<std::size_t>(n)]) {
          pass = false;
        }
      }
    }
    check("A_{" + std::to_string(t) + ",k} oracle = generating function, k <= 4, n <= " +
              std::to_string(max_n),
          pass);
  }

  // direct tuple enumeration vs convolution
  {
    bool pass = true;
    for (long t : {2L, 3L, 5L}) {
      for (long k = 1; k <= 3; ++k) {
        const auto oracle = tuple_counts_oracle(t, k, 8, cap);
        for (long n = 0; n <= 8; ++n) {
          if (tuple_count_direct(t, k, n, cap) != oracle.counts[static_cast<std::size_t>(n)]) {
            pass = false;
          }
        }
      }
    }
    check("direct k-tuple enumeration matches convolution (n <= 8, k <= 3)", pass);
  }

  if (f.json_out) {
    std::cout << json{{"ok", ok}, {"checks", lines}}.dump(2) << "\n";
  } else {
    for (const auto& line : lines) std::cout << line << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
    print_usage();
    return args.empty() ? 2 : 0;
  }
  const std::string command = args[0];
  try {
    const Flags flags = parse_flags({args.begin() + 1, args.end()});
    if (command == "coeff") return cmd_coeff(flags);
    if (command == "verify") return cmd_verify(flags);
    if (command == "mine") return cmd_mine(flags);
    if (command == "recurrence") return cmd_recurrence(flags);
    if (command == "oracle-check") return cmd_oracle_check(flags);
    throw UsageError("unknown command '" + command + "'");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run 'qcore help' for usage\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
