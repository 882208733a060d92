#pragma once

#include <utility>

#include "ehlcp/rational.hpp"

namespace ehlcp {

// Exact LP in "maximize" form over free variables:
//   max objective·x  s.t.  eq rows: row·x = rhs,  le rows: row·x <= rhs.
// An empty objective encodes a pure feasibility query.
struct LinearProgram {
  int num_vars = 0;
  Vec objective;
  std::vector<std::pair<Vec, Rational>> eq;
  std::vector<std::pair<Vec, Rational>> le;

  void add_eq(Vec row, Rational rhs);
  void add_le(Vec row, Rational rhs);
  void validate() const;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;  // meaningful for Optimal
  Vec witness;     // feasible point; for Optimal it attains value
};

/// Two-phase primal simplex on the standard-form tableau, Bland's rule for
/// anti-cycling. Exact; terminates on every input.
LpResult lp_max(const LinearProgram& p);

/// Feasibility shorthand: lp_max with a zero objective.
LpResult lp_feasible(LinearProgram p);

}  // namespace ehlcp
