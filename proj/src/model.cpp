#include "ehlcp/model.hpp"

namespace ehlcp {

MatrixTuple::MatrixTuple(std::vector<Matrix> ms) : mats(std::move(ms)) {
  if (mats.size() < 2) throw std::invalid_argument("MatrixTuple: need at least (C0, C1)");
  n = mats.front().rows();
  k = int(mats.size()) - 1;
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("MatrixTuple: all matrices must be n-by-n");
  }
}

Instance::Instance(MatrixTuple t, std::vector<Vec> d_in, Vec q_in)
    : tuple(std::move(t)), d(std::move(d_in)), q(std::move(q_in)) {
  if (int(d.size()) != tuple.k - 1)
    throw std::invalid_argument("Instance: expected k-1 bound vectors");
  for (const auto& dj : d) {
    if (int(dj.size()) != tuple.n) throw std::invalid_argument("Instance: bound vector length mismatch");
    if (!all_positive(dj)) throw std::invalid_argument("Instance: bound vectors must be strictly positive");
  }
  if (int(q.size()) != tuple.n) throw std::invalid_argument("Instance: q length mismatch");
}

SolutionTuple SolutionTuple::zero(int n, int k) {
  return SolutionTuple(std::vector<Vec>(size_t(k) + 1, Vec(size_t(n))));
}

Vec stack(const SolutionTuple& x) {
  Vec out;
  for (const auto& v : x.xs) out.insert(out.end(), v.begin(), v.end());
  return out;
}

SolutionTuple unstack(const Vec& stacked, int n, int k) {
  if (int(stacked.size()) != (k + 1) * n) throw std::invalid_argument("unstack: length mismatch");
  SolutionTuple x;
  x.xs.resize(size_t(k) + 1);
  for (int j = 0; j <= k; ++j) x.xs[j] = Vec(stacked.begin() + size_t(j) * n, stacked.begin() + size_t(j + 1) * n);
  return x;
}

bool check_complementarity(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("check_complementarity: length mismatch");
  const bool via_min = is_zero(min(x, y));
  const bool nonneg = all_nonneg(x) && all_nonneg(y);
  const bool via_hadamard = nonneg && is_zero(hadamard(x, y));
  const bool via_inner = nonneg && dot(x, y) == 0;
  if (via_min != via_hadamard || via_min != via_inner)
    throw std::logic_error("check_complementarity: equivalent forms disagree");
  return via_min;
}

bool verify_solution(const Instance& inst, const SolutionTuple& x) {
  const int k = inst.k(), n = inst.n();
  if (int(x.xs.size()) != k + 1) throw std::invalid_argument("verify_solution: tuple arity mismatch");
  for (const auto& v : x.xs)
    if (int(v.size()) != n) throw std::invalid_argument("verify_solution: vector length mismatch");

  Vec lhs = inst.tuple.c(0) * x.xs[0];
  Vec rhs = inst.q;
  for (int i = 1; i <= k; ++i) rhs = add(rhs, inst.tuple.c(i) * x.xs[i]);
  if (lhs != rhs) return false;

  if (!check_complementarity(x.xs[0], x.xs[1])) return false;
  for (int j = 1; j <= k - 1; ++j) {
    if (!check_complementarity(sub(inst.d[j - 1], x.xs[j]), x.xs[j + 1])) return false;
  }
  return true;
}

bool check_chain_lemma(const Instance& inst, const SolutionTuple& x) {
  if (!verify_solution(inst, x))
    throw std::invalid_argument("check_chain_lemma: x does not solve the instance");
  for (int j = 1; j <= inst.k(); ++j) {
    if (!check_complementarity(x.xs[0], x.xs[j])) return false;
  }
  return true;
}

ConstraintSet branch_constraints(const Instance& inst, const Branch& b) {
  const int n = inst.n(), k = inst.k();
  if (int(b.level.size()) != n) throw std::invalid_argument("branch_constraints: branch length mismatch");
  for (int l : b.level)
    if (l < 0 || l > k) throw std::invalid_argument("branch_constraints: level out of range");

  const int dim = (k + 1) * n;
  ConstraintSet cs;
  cs.dim = dim;
  auto var = [&](int j, int i) { return j * n + i; };
  auto unit = [&](int j, int i, const Rational& c) {
    Vec row(dim);
    row[var(j, i)] = c;
    return row;
  };

  // Global equation C0 x0 - sum Ci xi = q.
  for (int r = 0; r < n; ++r) {
    Vec row(dim);
    for (int c = 0; c < n; ++c) row[var(0, c)] = inst.tuple.c(0).at(r, c);
    for (int j = 1; j <= k; ++j)
      for (int c = 0; c < n; ++c) row[var(j, c)] = -inst.tuple.c(j).at(r, c);
    cs.eq.push_back({std::move(row), inst.q[r]});
  }

  for (int i = 0; i < n; ++i) {
    const int l = b.level[i];
    if (l == 0) {
      cs.le.push_back({unit(0, i, -1), 0});  // x0_i >= 0
      for (int j = 1; j <= k; ++j) cs.eq.push_back({unit(j, i, 1), 0});
    } else {
      cs.eq.push_back({unit(0, i, 1), 0});  // x0_i = 0
      for (int j = 1; j < l; ++j) cs.eq.push_back({unit(j, i, 1), inst.d[j - 1][i]});
      cs.le.push_back({unit(l, i, -1), 0});  // x_l,i >= 0
      if (l < k) cs.le.push_back({unit(l, i, 1), inst.d[l - 1][i]});
      for (int j = l + 1; j <= k; ++j) cs.eq.push_back({unit(j, i, 1), 0});
    }
  }
  return cs;
}

std::vector<Branch> all_branches(int n, int k) {
  std::vector<Branch> out;
  Branch b;
  b.level.assign(size_t(n), 0);
  for (;;) {
    out.push_back(b);
    int i = n - 1;
    while (i >= 0 && b.level[i] == k) b.level[i--] = 0;
    if (i < 0) break;
    ++b.level[i];
  }
  return out;
}

bool satisfies(const ConstraintSet& cons, const Vec& point) {
  if (int(point.size()) != cons.dim) throw std::invalid_argument("satisfies: point dimension mismatch");
  for (const auto& c : cons.eq)
    if (dot(c.coeffs, point) != c.rhs) return false;
  for (const auto& c : cons.le)
    if (dot(c.coeffs, point) > c.rhs) return false;
  return true;
}

}  // namespace ehlcp
