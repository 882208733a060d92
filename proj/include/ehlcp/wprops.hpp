#pragma once

#include <cstdint>

#include "ehlcp/matclass.hpp"
#include "ehlcp/model.hpp"

namespace ehlcp {

// Column choice defining one representative matrix: column j is taken from
// tuple member cols[j].
struct RepChoice {
  std::vector<int> cols;
};

// No-certificate for the column W property: a zero-determinant
// representative, or (when `second` is set) two representatives whose
// determinants have opposite strict signs.
struct ColumnWCertificate {
  RepChoice first;
  Rational det_first;
  std::optional<RepChoice> second;
  Rational det_second;
};

// Yes-certificate for column W0: the perturbation tuple and the tested grid.
struct W0Certificate {
  MatrixTuple perturbation;
  std::vector<Rational> eps_grid;
};

// No-certificate from the diagonal probe: k+1 nonnegative diagonals with
// det(sum Ci Di) = 0.
struct DiagCertificate {
  std::vector<Vec> diags;
};

// Tuple-property verdict. A No re-verifies by direct substitution of its
// certificate; a column-W Yes records the common determinant sign.
struct Verdict {
  Status status = Status::Unknown;
  int sign = 0;
  std::optional<SolutionTuple> witness;
  std::optional<ColumnWCertificate> reps;
  std::optional<W0Certificate> w0;
  std::optional<DiagCertificate> diag;

  bool yes() const { return status == Status::Yes; }
  bool no() const { return status == Status::No; }
};

Matrix representative(const MatrixTuple& c, const RepChoice& choice);

/// All (k+1)^n representative matrices, lexicographic in the choice vector
/// (column 0 most significant).
std::vector<Matrix> representatives(const MatrixTuple& c);

/// Column W: all representative determinants share one strict sign.
Verdict column_w(const MatrixTuple& c);

/// Sampling cross-check of column W via nonnegative diagonal combinations
/// (never a Yes decision): returns No with a diagonal witness when some
/// sampled det(sum Ci Di) vanishes, else Unknown. The k+1 pure selections
/// Di = I are always probed before random draws.
Verdict column_w_diag_probe(const MatrixTuple& c, int trials, std::uint64_t rng_seed);

/// Column W0 semi-decision:
///  (a) mixed strict determinant signs among representatives -> No;
///  (b) some candidate N with C + eps*N column W for every grid eps -> Yes;
///  (c) otherwise Unknown.
Verdict column_w0(const MatrixTuple& c, const std::vector<MatrixTuple>& n_candidates,
                  const std::vector<Rational>& eps_grid);

/// Default candidates (zero and all-identity perturbations) and grid
/// (1, 1/2, ..., 1/16).
Verdict column_w0(const MatrixTuple& c);

std::vector<MatrixTuple> default_w0_candidates(int n, int k);
std::vector<Rational> default_w0_grid();

/// R0-W: the homogeneous system C0 x0 = sum Ci xi, x0 ^ xj = 0 for all j
/// has only the zero solution. Decided by one feasibility LP per support.
Verdict r0_w(const MatrixTuple& c);

/// SSM-W: C0 x0 = sum Ci xi, xi >= 0, x0 * xi <= 0 for all i forces x = 0.
/// Decided by one feasibility LP per sign support of x0.
Verdict ssm_w(const MatrixTuple& c);

/// (I, C0^{-1} C1, ..., C0^{-1} Ck); nullopt when C0 is singular.
std::optional<MatrixTuple> normalize_tuple(const MatrixTuple& c);

/// The pair (C0, C1 D1 + ... + Ck Dk) for nonnegative diagonals with
/// diag(D1 + ... + Dk) > 0 (throws otherwise). Diagonals given as vectors.
MatrixTuple diagonal_collapse(const MatrixTuple& c, const std::vector<Vec>& diagonals);

/// (P^T C0 P, ..., P^T Ck P) for the permutation i -> perm[i] of [n].
MatrixTuple permute_tuple(const MatrixTuple& c, const std::vector<int>& perm);

/// True iff x is a valid SSM-W failure certificate for c.
bool reverifies_not_ssm_w(const MatrixTuple& c, const SolutionTuple& x);

/// True iff x is a valid R0-W failure certificate for c.
bool reverifies_not_r0_w(const MatrixTuple& c, const SolutionTuple& x);

}  // namespace ehlcp
