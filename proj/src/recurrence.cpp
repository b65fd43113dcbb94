#include "qcore/recurrence.hpp"

#include <stdexcept>

#include "qcore/numbers.hpp"

namespace qcore {

RecurrenceState recurrence_initial() { return {0, 4, 550, 12500, 78125}; }

RecurrenceState recurrence_step(const RecurrenceState& s) {
  RecurrenceState next;
  next.alpha = s.alpha + 1;
  next.A = -s.C + 4 * s.D;
  next.B = -125 * s.B + 550 * s.D;
  next.C = -15625 * s.A + 12500 * s.D;
  next.D = 78125 * s.D;
  return next;
}

namespace {

bool at_least(const std::optional<long>& v, long bound) { return !v || *v >= bound; }

}  // namespace

std::vector<RecurrenceRow> recurrence_table(long alpha_max) {
  if (alpha_max < 0) throw std::invalid_argument("recurrence_table: alpha_max must be >= 0");
  if (alpha_max > 64) throw std::invalid_argument("recurrence_table: alpha_max must be <= 64");
  std::vector<RecurrenceRow> rows;
  RecurrenceState s = recurrence_initial();
  for (long alpha = 0; alpha <= alpha_max; ++alpha) {
    RecurrenceRow row;
    row.state = s;
    row.nuA = nu_p(s.A, 5);
    row.nuB = nu_p(s.B, 5);
    row.nuC = nu_p(s.C, 5);
    row.nuD = nu_p(s.D, 5);
    if (alpha == 0) {
      row.theorem_bound_ok = true;  // bounds are claims about alpha >= 1
      row.paper_display_ok = true;
    } else {
      row.theorem_bound_ok = at_least(row.nuA, alpha + 4) && at_least(row.nuB, alpha + 4) &&
                             at_least(row.nuC, alpha + 4) && at_least(row.nuD, alpha + 4);
      row.paper_display_ok = at_least(row.nuA, alpha + 4) && at_least(row.nuB, alpha + 5) &&
                             at_least(row.nuC, alpha + 5) && at_least(row.nuD, alpha + 6);
    }
    rows.push_back(std::move(row));
    s = recurrence_step(s);
  }
  return rows;
}

}  // namespace qcore
