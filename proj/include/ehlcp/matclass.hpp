#pragma once

#include "ehlcp/linalg.hpp"

namespace ehlcp {

enum class Status { Yes, No, Unknown };

const char* to_string(Status s);

// Verdict for a single-matrix class membership test; a No carries a witness
// vector that re-verifies the defining failure by direct substitution.
struct ClassVerdict {
  Status status = Status::Unknown;
  std::optional<Vec> witness;

  bool yes() const { return status == Status::Yes; }
  bool no() const { return status == Status::No; }
};

struct MatrixClassReport {
  bool is_z = false;
  ClassVerdict p, ssm, m;
};

/// All off-diagonal entries <= 0.
bool is_Z(const Matrix& m);

/// Every principal minor positive (decision); a No carries a nonzero x with
/// x * Mx <= 0 componentwise, found by sign-pattern LP search.
ClassVerdict is_P(const Matrix& m);

/// No nonzero x >= 0 with x * Mx <= 0; decided per support by a margin LP.
ClassVerdict is_SSM(const Matrix& m);

/// Z matrix with entrywise nonnegative inverse.
ClassVerdict is_M_matrix(const Matrix& m);

MatrixClassReport classify(const Matrix& m);

/// True iff x is a valid counterexample to the P property of m:
/// x != 0 and x_i (Mx)_i <= 0 for every i.
bool reverifies_not_P(const Matrix& m, const Vec& x);

/// True iff x is a valid counterexample to strict semimonotonicity:
/// x >= 0, x != 0, x * Mx <= 0.
bool reverifies_not_SSM(const Matrix& m, const Vec& x);

}  // namespace ehlcp
