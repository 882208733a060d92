#pragma once

#include <cstdint>

#include "ehlcp/model.hpp"

namespace ehlcp {

// Full solution set as polyhedral pieces; overlapping pieces produced by the
// branch enumeration are deduplicated (containment) before reporting, so the
// union is unchanged.
struct SolutionSet {
  std::vector<Piece> pieces;

  bool empty() const { return pieces.empty(); }
};

/// Stacked value of the residual map
///   F(x) = (C0 x0 - sum Ci xi, x0 ^ x1, (d1 - x1) ^ x2, ..., (d_{k-1} - x_{k-1}) ^ xk).
/// F(x) = (q, 0, ..., 0) exactly when x solves the instance with rhs q.
Vec ehlcp_residual(const MatrixTuple& c, const std::vector<Vec>& d, const SolutionTuple& x);

/// Enumerates all (k+1)^n branches, keeps the feasible ones with an exact
/// sample point, and drops pieces contained in other pieces.
SolutionSet solve_all(const Instance& inst);

/// True iff the stacked point lies in some piece of the set.
bool piece_membership(const SolutionSet& s, const Vec& stacked);

struct NewtonResult {
  bool success = false;
  SolutionTuple x;        // rationalized iterate
  int iterations = 0;
  double residual = 0.0;  // final max-norm of F(x) - q_hat
  bool exact_verified = false;
};

/// Damped semismooth Newton on the residual in floating point; incomplete by
/// design (returns failure rather than throwing). On success the iterate is
/// snapped to nearby rationals and re-verified exactly when possible.
NewtonResult solve_newton(const Instance& inst, const SolutionTuple& start, double tol = 1e-12,
                          int max_iter = 100);

struct DegreeResult {
  enum class Kind { Value, UndefinedNotR0W, GenericityExhausted };
  Kind kind = Kind::UndefinedNotR0W;
  long long value = 0;
  Vec generic_point;  // the q-block perturbation used
  // (linearity-cell selector, Jacobian determinant sign) per counted solution
  std::vector<std::pair<std::vector<int>, int>> counted;

  bool defined() const { return kind == Kind::Value; }
};

/// EHLCP-degree: signed count of preimages of a generic target (p, 0, ..., 0)
/// over the linearity cells of the residual map. Undefined without the R0-W
/// property; redraws the target on any boundary or degeneracy hit.
DegreeResult degree(const MatrixTuple& c, const std::vector<Vec>& d, std::uint64_t rng_seed,
                    int max_retries = 64);

}  // namespace ehlcp
