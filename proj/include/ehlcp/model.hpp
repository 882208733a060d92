#pragma once

#include "ehlcp/linalg.hpp"

namespace ehlcp {

// Ordered tuple (C0, C1, ..., Ck) of n-by-n matrices.
struct MatrixTuple {
  int n = 0;
  int k = 0;
  std::vector<Matrix> mats;

  MatrixTuple() = default;
  explicit MatrixTuple(std::vector<Matrix> ms);

  const Matrix& c(int i) const { return mats.at(size_t(i)); }
};

// One EHLCP: find (x0,...,xk) with C0 x0 = q + sum Ci xi, x0 ^ x1 = 0 and
// (d_j - x_j) ^ x_{j+1} = 0 for 1 <= j <= k-1. Requires every d_j > 0.
struct Instance {
  MatrixTuple tuple;
  std::vector<Vec> d;  // k-1 positive bound vectors
  Vec q;

  Instance() = default;
  Instance(MatrixTuple t, std::vector<Vec> d_in, Vec q_in);

  int n() const { return tuple.n; }
  int k() const { return tuple.k; }
};

struct SolutionTuple {
  std::vector<Vec> xs;  // k+1 vectors of length n

  SolutionTuple() = default;
  explicit SolutionTuple(std::vector<Vec> v) : xs(std::move(v)) {}
  static SolutionTuple zero(int n, int k);
};

// Per-coordinate active level in the complementarity chain: level 0 means
// x0_i is the free nonnegative entry, level l >= 1 means x_j,i is pinned to
// d_j,i below l, free in [0, d_l,i] at l (unbounded above when l = k), and
// zero above l.
struct Branch {
  std::vector<int> level;
};

struct LinearConstraint {
  Vec coeffs;  // over the stacked (k+1)*n variables
  Rational rhs;
};

struct ConstraintSet {
  int dim = 0;
  std::vector<LinearConstraint> eq;
  std::vector<LinearConstraint> le;
};

// Polyhedral cell of the solution set: every point satisfying the
// constraints solves the instance, and `sample` is one such point.
struct Piece {
  Branch branch;
  ConstraintSet cons;
  SolutionTuple sample;
};

Vec stack(const SolutionTuple& x);
SolutionTuple unstack(const Vec& stacked, int n, int k);

/// min(x,y) = 0, evaluated through all three equivalent characterizations
/// (min map, Hadamard product, inner product); they are asserted to agree.
bool check_complementarity(const Vec& x, const Vec& y);

/// Exact test of the defining system of the instance at x.
bool verify_solution(const Instance& inst, const SolutionTuple& x);

/// Requires verify_solution(inst, x); tests the derived chain
/// x0 ^ xj = 0 for all j in [k] (which holds for every solution).
bool check_chain_lemma(const Instance& inst, const SolutionTuple& x);

/// Linear constraint system whose solution set is exactly the set of
/// instance solutions consistent with branch b; the union over all
/// (k+1)^n branches is SOL(C,d,q).
ConstraintSet branch_constraints(const Instance& inst, const Branch& b);

/// All (k+1)^n branches in lexicographic order of their level vectors.
std::vector<Branch> all_branches(int n, int k);

bool satisfies(const ConstraintSet& cons, const Vec& point);

}  // namespace ehlcp
