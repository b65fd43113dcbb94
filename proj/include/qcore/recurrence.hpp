#pragma once

// The coefficient quadruple (A, B, C, D) driving the iterated 5-dissection
// of the A_{5,4} generating function:
//
//   sum A_{5,4}(5^{a+1} n + 5^{a+1} - 4) q^n
//     = A_a f5^2 f1^14 + B_a q f5^8 f1^8 + C_a q^2 f5^14 f1^2
//       + D_a q^3 sum A_{5,4}(n) q^n
//
// with (A,B,C,D)_0 = (4, 550, 12500, 78125) and the linear step below.
// Divisibility by growing powers of 5 in these integers is what yields the
// congruence family A_{5,4}(5^{a+1} n + 5^{a+1} - 4) == 0 (mod 5^{a+4}).

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace qcore {

struct RecurrenceState {
  long alpha = 0;
  mpz_class A, B, C, D;
};

/// (alpha, A, B, C, D) = (0, 4, 550, 12500, 78125).
RecurrenceState recurrence_initial();

/// One step: A' = -C + 4D, B' = -125B + 550D, C' = -15625A + 12500D,
/// D' = 78125 D.
RecurrenceState recurrence_step(const RecurrenceState& s);

struct RecurrenceRow {
  RecurrenceState state;
  // 5-adic valuations; nullopt = infinite (never happens for these values)
  std::optional<long> nuA, nuB, nuC, nuD;
  // min valuation >= alpha + 4 -- what the congruence family needs
  bool theorem_bound_ok = false;
  // nuA >= alpha+4, nuB >= alpha+5, nuC >= alpha+5, nuD >= alpha+6 -- the
  // stronger per-column bounds; known to fail for B at alpha = 1
  bool paper_display_ok = false;
};

/// Rows for alpha = 0 .. alpha_max with exact valuations. Both bound flags
/// apply to alpha >= 1 and are vacuously true on the alpha = 0 base row.
/// Requires alpha_max <= 64 (the integers grow like 5^{7 alpha}).
std::vector<RecurrenceRow> recurrence_table(long alpha_max);

}  // namespace qcore
