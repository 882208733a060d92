#include "ehlcp/wprops.hpp"

#include "ehlcp/linprog.hpp"
#include "ehlcp/parallel.hpp"
#include "ehlcp/rng.hpp"

namespace ehlcp {

namespace {

std::int64_t pow_ll(int base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Decode index -> choice vector, column 0 most significant.
RepChoice decode_choice(std::int64_t idx, int n, int k) {
  RepChoice ch;
  ch.cols.assign(size_t(n), 0);
  for (int j = n - 1; j >= 0; --j) {
    ch.cols[size_t(j)] = int(idx % (k + 1));
    idx /= (k + 1);
  }
  return ch;
}

}  // namespace

Matrix representative(const MatrixTuple& c, const RepChoice& choice) {
  if (int(choice.cols.size()) != c.n) throw std::invalid_argument("representative: choice length mismatch");
  Matrix r(c.n, c.n);
  for (int j = 0; j < c.n; ++j) {
    const int m = choice.cols[size_t(j)];
    if (m < 0 || m > c.k) throw std::invalid_argument("representative: member index out of range");
    for (int i = 0; i < c.n; ++i) r.at(i, j) = c.c(m).at(i, j);
  }
  return r;
}

std::vector<Matrix> representatives(const MatrixTuple& c) {
  const std::int64_t count = pow_ll(c.k + 1, c.n);
  std::vector<Matrix> out(static_cast<size_t>(count));
  parallel_for(count, [&](std::int64_t i) { out[size_t(i)] = representative(c, decode_choice(i, c.n, c.k)); });
  return out;
}

Verdict column_w(const MatrixTuple& c) {
  const std::int64_t count = pow_ll(c.k + 1, c.n);
  std::vector<Rational> dets(static_cast<size_t>(count));
  parallel_for(count, [&](std::int64_t i) { dets[size_t(i)] = det(representative(c, decode_choice(i, c.n, c.k))); });

  Verdict v;
  std::int64_t first_signed = -1;
  for (std::int64_t i = 0; i < count; ++i) {
    const int s = sign(dets[size_t(i)]);
    if (s == 0) {
      v.status = Status::No;
      v.reps = ColumnWCertificate{decode_choice(i, c.n, c.k), dets[size_t(i)], std::nullopt, 0};
      return v;
    }
    if (first_signed < 0) {
      first_signed = i;
    } else if (s != sign(dets[size_t(first_signed)])) {
      v.status = Status::No;
      v.reps = ColumnWCertificate{decode_choice(first_signed, c.n, c.k), dets[size_t(first_signed)],
                                  decode_choice(i, c.n, c.k), dets[size_t(i)]};
      return v;
    }
  }
  v.status = Status::Yes;
  v.sign = sign(dets[0]);
  return v;
}

Verdict column_w_diag_probe(const MatrixTuple& c, int trials, std::uint64_t rng_seed) {
  SplitRng rng(rng_seed);
  auto test = [&](const std::vector<Vec>& diags) -> bool {
    Matrix sum = Matrix::zero(c.n, c.n);
    for (int i = 0; i <= c.k; ++i) sum = sum + c.c(i) * Matrix::diagonal(diags[size_t(i)]);
    return det(sum) == 0;
  };

  // Pure selections first: Di = I for one member, zero elsewhere.
  for (int i = 0; i <= c.k; ++i) {
    std::vector<Vec> diags(size_t(c.k) + 1, Vec(size_t(c.n)));
    diags[size_t(i)] = Vec(size_t(c.n), Rational(1));
    if (test(diags)) {
      Verdict v;
      v.status = Status::No;
      v.diag = DiagCertificate{std::move(diags)};
      return v;
    }
  }
  for (int t = 0; t < trials; ++t) {
    std::vector<Vec> diags(size_t(c.k) + 1, Vec(size_t(c.n)));
    for (int i = 0; i < c.n; ++i) {
      for (int j = 0; j <= c.k; ++j) diags[size_t(j)][size_t(i)] = rng.rational(0, 2, 2);
      bool any = false;
      for (int j = 0; j <= c.k; ++j) any = any || diags[size_t(j)][size_t(i)] > 0;
      if (!any) diags[size_t(rng.uniform_int(0, c.k))][size_t(i)] = rng.positive_rational(2, 2);
    }
    if (test(diags)) {
      Verdict v;
      v.status = Status::No;
      v.diag = DiagCertificate{std::move(diags)};
      return v;
    }
  }
  Verdict v;
  v.status = Status::Unknown;
  return v;
}

std::vector<MatrixTuple> default_w0_candidates(int n, int k) {
  std::vector<Matrix> zeros(size_t(k) + 1, Matrix::zero(n, n));
  std::vector<Matrix> ids(size_t(k) + 1, Matrix::identity(n));
  return {MatrixTuple(std::move(zeros)), MatrixTuple(std::move(ids))};
}

std::vector<Rational> default_w0_grid() {
  return {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)};
}

Verdict column_w0(const MatrixTuple& c, const std::vector<MatrixTuple>& n_candidates,
                  const std::vector<Rational>& eps_grid) {
  if (eps_grid.empty()) throw std::invalid_argument("column_w0: empty epsilon grid");
  for (size_t i = 0; i < eps_grid.size(); ++i) {
    if (eps_grid[i] <= 0) throw std::invalid_argument("column_w0: grid must be positive");
    if (i && eps_grid[i] >= eps_grid[i - 1])
      throw std::invalid_argument("column_w0: grid must be strictly decreasing");
  }

  // Necessary condition: representative determinants may not take both
  // strict signs (limits of column-W perturbations have one weak sign).
  const std::int64_t count = pow_ll(c.k + 1, c.n);
  std::vector<Rational> dets(static_cast<size_t>(count));
  parallel_for(count, [&](std::int64_t i) { dets[size_t(i)] = det(representative(c, decode_choice(i, c.n, c.k))); });
  std::int64_t pos = -1, neg = -1;
  for (std::int64_t i = 0; i < count && (pos < 0 || neg < 0); ++i) {
    const int s = sign(dets[size_t(i)]);
    if (s > 0 && pos < 0) pos = i;
    if (s < 0 && neg < 0) neg = i;
  }
  if (pos >= 0 && neg >= 0) {
    Verdict v;
    v.status = Status::No;
    v.reps = ColumnWCertificate{decode_choice(pos, c.n, c.k), dets[size_t(pos)],
                                decode_choice(neg, c.n, c.k), dets[size_t(neg)]};
    return v;
  }

  for (const auto& cand : n_candidates) {
    if (cand.n != c.n || cand.k != c.k)
      throw std::invalid_argument("column_w0: candidate shape mismatch");
    bool ok = true;
    for (const auto& eps : eps_grid) {
      std::vector<Matrix> mats;
      mats.reserve(size_t(c.k) + 1);
      for (int i = 0; i <= c.k; ++i) mats.push_back(c.c(i) + cand.c(i) * eps);
      if (!column_w(MatrixTuple(std::move(mats))).yes()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Verdict v;
      v.status = Status::Yes;
      v.w0 = W0Certificate{cand, eps_grid};
      return v;
    }
  }
  Verdict v;
  v.status = Status::Unknown;
  return v;
}

Verdict column_w0(const MatrixTuple& c) {
  return column_w0(c, default_w0_candidates(c.n, c.k), default_w0_grid());
}

namespace {

// Shared LP skeleton over the stacked (k+1)*n variables with the coupling
// rows C0 x0 - sum Ci xi = 0.
LinearProgram homogeneous_base(const MatrixTuple& c) {
  const int n = c.n, k = c.k;
  LinearProgram lp;
  lp.num_vars = (k + 1) * n;
  for (int r = 0; r < n; ++r) {
    Vec row(static_cast<size_t>(lp.num_vars));
    for (int j = 0; j < n; ++j) row[size_t(j)] = c.c(0).at(r, j);
    for (int i = 1; i <= k; ++i)
      for (int j = 0; j < n; ++j) row[size_t(i * n + j)] = -c.c(i).at(r, j);
    lp.add_eq(std::move(row), 0);
  }
  return lp;
}

Vec unit_row(int dim, int idx, const Rational& coeff) {
  Vec row(static_cast<size_t>(dim));
  row[size_t(idx)] = coeff;
  return row;
}

}  // namespace

bool reverifies_not_r0_w(const MatrixTuple& c, const SolutionTuple& x) {
  if (int(x.xs.size()) != c.k + 1) return false;
  Vec stacked = stack(x);
  if (is_zero(stacked)) return false;
  Vec lhs = c.c(0) * x.xs[0];
  Vec rhs(static_cast<size_t>(c.n));
  for (int i = 1; i <= c.k; ++i) rhs = add(rhs, c.c(i) * x.xs[i]);
  if (lhs != rhs) return false;
  for (int j = 1; j <= c.k; ++j)
    if (!check_complementarity(x.xs[0], x.xs[size_t(j)])) return false;
  return true;
}

bool reverifies_not_ssm_w(const MatrixTuple& c, const SolutionTuple& x) {
  if (int(x.xs.size()) != c.k + 1) return false;
  Vec stacked = stack(x);
  if (is_zero(stacked)) return false;
  Vec lhs = c.c(0) * x.xs[0];
  Vec rhs(static_cast<size_t>(c.n));
  for (int i = 1; i <= c.k; ++i) rhs = add(rhs, c.c(i) * x.xs[i]);
  if (lhs != rhs) return false;
  for (int j = 1; j <= c.k; ++j) {
    if (!all_nonneg(x.xs[size_t(j)])) return false;
    for (int i = 0; i < c.n; ++i)
      if (x.xs[0][size_t(i)] * x.xs[size_t(j)][size_t(i)] > 0) return false;
  }
  return true;
}

Verdict r0_w(const MatrixTuple& c) {
  const int n = c.n, k = c.k;
  const int dim = (k + 1) * n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    LinearProgram lp = homogeneous_base(c);
    Vec norm(static_cast<size_t>(dim));
    for (int i = 0; i < n; ++i) {
      const bool in_alpha = mask & (1u << i);
      if (in_alpha) {
        lp.add_le(unit_row(dim, i, -1), 0);  // x0_i >= 0
      } else {
        lp.add_eq(unit_row(dim, i, 1), 0);
      }
      norm[size_t(i)] = in_alpha ? 1 : 0;
      for (int j = 1; j <= k; ++j) {
        if (in_alpha) {
          lp.add_eq(unit_row(dim, j * n + i, 1), 0);
        } else {
          lp.add_le(unit_row(dim, j * n + i, -1), 0);  // xj_i >= 0
        }
        norm[size_t(j * n + i)] = 1;
      }
    }
    lp.add_eq(std::move(norm), 1);
    const LpResult r = lp_feasible(lp);
    if (r.status == LpStatus::Optimal) {
      Verdict v;
      v.status = Status::No;
      v.witness = unstack(r.witness, n, k);
      if (!reverifies_not_r0_w(c, *v.witness))
        throw std::logic_error("r0_w: LP witness fails re-verification");
      return v;
    }
  }
  Verdict v;
  v.status = Status::Yes;
  return v;
}

Verdict ssm_w(const MatrixTuple& c) {
  const int n = c.n, k = c.k;
  const int dim = (k + 1) * n;
  // alpha ranges over candidate positive supports of x0.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    LinearProgram lp = homogeneous_base(c);
    Vec norm(static_cast<size_t>(dim));
    for (int i = 0; i < n; ++i) {
      const bool in_alpha = mask & (1u << i);
      lp.add_le(unit_row(dim, i, in_alpha ? -1 : 1), 0);  // x0 >= 0 on alpha, <= 0 off
      norm[size_t(i)] = in_alpha ? 1 : -1;
      for (int j = 1; j <= k; ++j) {
        if (in_alpha) {
          lp.add_eq(unit_row(dim, j * n + i, 1), 0);
        } else {
          lp.add_le(unit_row(dim, j * n + i, -1), 0);
        }
        norm[size_t(j * n + i)] = 1;
      }
    }
    lp.add_eq(std::move(norm), 1);
    const LpResult r = lp_feasible(lp);
    if (r.status == LpStatus::Optimal) {
      Verdict v;
      v.status = Status::No;
      v.witness = unstack(r.witness, n, k);
      if (!reverifies_not_ssm_w(c, *v.witness))
        throw std::logic_error("ssm_w: LP witness fails re-verification");
      return v;
    }
  }
  Verdict v;
  v.status = Status::Yes;
  return v;
}

std::optional<MatrixTuple> normalize_tuple(const MatrixTuple& c) {
  const auto inv = inverse(c.c(0));
  if (!inv) return std::nullopt;
  std::vector<Matrix> mats;
  mats.reserve(size_t(c.k) + 1);
  mats.push_back(Matrix::identity(c.n));
  for (int i = 1; i <= c.k; ++i) mats.push_back(*inv * c.c(i));
  return MatrixTuple(std::move(mats));
}

MatrixTuple diagonal_collapse(const MatrixTuple& c, const std::vector<Vec>& diagonals) {
  if (int(diagonals.size()) != c.k) throw std::invalid_argument("diagonal_collapse: expected k diagonals");
  Vec diag_sum(static_cast<size_t>(c.n));
  for (const auto& dg : diagonals) {
    if (int(dg.size()) != c.n) throw std::invalid_argument("diagonal_collapse: diagonal length mismatch");
    if (!all_nonneg(dg)) throw std::invalid_argument("diagonal_collapse: diagonals must be nonnegative");
    diag_sum = add(diag_sum, dg);
  }
  if (!all_positive(diag_sum))
    throw std::invalid_argument("diagonal_collapse: diag(D1+...+Dk) must be positive");
  Matrix second = Matrix::zero(c.n, c.n);
  for (int i = 1; i <= c.k; ++i) second = second + c.c(i) * Matrix::diagonal(diagonals[size_t(i - 1)]);
  return MatrixTuple({c.c(0), std::move(second)});
}

MatrixTuple permute_tuple(const MatrixTuple& c, const std::vector<int>& perm) {
  if (int(perm.size()) != c.n) throw std::invalid_argument("permute_tuple: permutation length mismatch");
  std::vector<bool> seen(size_t(c.n), false);
  for (int p : perm) {
    if (p < 0 || p >= c.n || seen[size_t(p)]) throw std::invalid_argument("permute_tuple: not a permutation");
    seen[size_t(p)] = true;
  }
  std::vector<Matrix> mats;
  mats.reserve(size_t(c.k) + 1);
  for (int m = 0; m <= c.k; ++m) {
    Matrix r(c.n, c.n);
    for (int a = 0; a < c.n; ++a)
      for (int b = 0; b < c.n; ++b) r.at(a, b) = c.c(m).at(perm[size_t(a)], perm[size_t(b)]);
    mats.push_back(std::move(r));
  }
  return MatrixTuple(std::move(mats));
}

}  // namespace ehlcp
