#include "ehlcp/linprog.hpp"

namespace ehlcp {

void LinearProgram::add_eq(Vec row, Rational rhs) {
  eq.emplace_back(std::move(row), std::move(rhs));
}

void LinearProgram::add_le(Vec row, Rational rhs) {
  le.emplace_back(std::move(row), std::move(rhs));
}

void LinearProgram::validate() const {
  if (num_vars < 0) throw std::invalid_argument("LinearProgram: negative num_vars");
  if (!objective.empty() && int(objective.size()) != num_vars)
    throw std::invalid_argument("LinearProgram: objective length mismatch");
  for (const auto& [row, rhs] : eq)
    if (int(row.size()) != num_vars) throw std::invalid_argument("LinearProgram: eq row length mismatch");
  for (const auto& [row, rhs] : le)
    if (int(row.size()) != num_vars) throw std::invalid_argument("LinearProgram: le row length mismatch");
}

namespace {

// Dense tableau over rationals. Columns: structural (free vars split into
// u - v), then slacks, then artificials; last column is the rhs. The cost
// row is kept as negated reduced costs, so Bland's entering rule is
// "smallest column with a negative cost entry".
class Tableau {
 public:
  Tableau(int m, int cols) : m_(m), cols_(cols), t_(size_t(m + 1) * (cols + 1)), basis_(m, -1) {}

  Rational& at(int i, int j) { return t_[size_t(i) * (cols_ + 1) + j]; }
  Rational& rhs(int i) { return at(i, cols_); }
  Rational& cost(int j) { return at(m_, j); }
  Rational& objective_value() { return at(m_, cols_); }
  int basis(int i) const { return basis_[i]; }

  void pivot(int row, int col) {
    const Rational piv = at(row, col);
    for (int j = 0; j <= cols_; ++j) at(row, j) /= piv;
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const Rational f = at(i, col);
      if (f == 0) continue;
      for (int j = 0; j <= cols_; ++j) at(i, j) -= f * at(row, j);
    }
    basis_[row] = col;
  }

  // Bland: entering = smallest column with negative cost among allowed ones;
  // leaving = smallest ratio, ties broken by smallest basic variable index.
  // Returns Optimal when no entering column, Unbounded when no leaving row.
  LpStatus run(int allowed_cols) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (cost(j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (at(i, enter) <= 0) continue;
        Rational ratio = rhs(i) / at(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  int rows() const { return m_; }

 private:
  int m_, cols_;
  std::vector<Rational> t_;
  std::vector<int> basis_;
};

}  // namespace

LpResult lp_max(const LinearProgram& p) {
  p.validate();
  const int n = p.num_vars;
  const int n_split = 2 * n;                       // u - v split of free vars
  const int n_slack = int(p.le.size());
  const int m = int(p.eq.size() + p.le.size());
  const int n_art = m;
  const int cols = n_split + n_slack + n_art;

  Tableau t(m, cols);

  int row = 0;
  auto load_row = [&](const Vec& coeffs, const Rational& rhs, int slack_idx) {
    const bool flip = rhs < 0;
    for (int j = 0; j < n; ++j) {
      Rational c = flip ? Rational(-coeffs[j]) : coeffs[j];
      t.at(row, 2 * j) = c;
      t.at(row, 2 * j + 1) = -c;
    }
    if (slack_idx >= 0) t.at(row, n_split + slack_idx) = flip ? -1 : 1;
    t.at(row, n_split + n_slack + row) = 1;  // artificial
    t.rhs(row) = flip ? Rational(-rhs) : rhs;
    ++row;
  };
  for (const auto& [coeffs, rhs] : p.eq) load_row(coeffs, rhs, -1);
  for (size_t i = 0; i < p.le.size(); ++i) load_row(p.le[i].first, p.le[i].second, int(i));

  // Phase 1: maximize -sum(artificials), starting basis = artificials.
  for (int j = 0; j < n_art; ++j) t.cost(n_split + n_slack + j) = 1;
  for (int i = 0; i < m; ++i) {
    t.pivot(i, n_split + n_slack + i);  // price out the initial basis
  }
  t.run(cols);
  if (t.objective_value() < 0) return {LpStatus::Infeasible, 0, {}};

  // Drive leftover artificials out of the basis; a row with no pivot in the
  // real columns is redundant and harmless (its rhs is 0 here).
  for (int i = 0; i < m; ++i) {
    if (t.basis(i) < n_split + n_slack) continue;
    for (int j = 0; j < n_split + n_slack; ++j) {
      if (t.at(i, j) != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2 over the real columns only.
  for (int j = 0; j <= cols; ++j) t.cost(j) = 0;
  if (!p.objective.empty()) {
    for (int j = 0; j < n; ++j) {
      t.cost(2 * j) = -p.objective[j];
      t.cost(2 * j + 1) = p.objective[j];
    }
  }
  for (int i = 0; i < m; ++i) {
    const int b = t.basis(i);
    if (b < n_split + n_slack && t.cost(b) != 0) {
      const Rational f = t.cost(b);
      for (int j = 0; j <= cols; ++j) t.cost(j) -= f * t.at(i, j);
    }
  }
  const LpStatus status = t.run(n_split + n_slack);

  Vec split(n_split);
  for (int i = 0; i < m; ++i) {
    if (t.basis(i) < n_split) split[t.basis(i)] = t.rhs(i);
  }
  Vec x(n);
  for (int j = 0; j < n; ++j) x[j] = split[2 * j] - split[2 * j + 1];

  if (status == LpStatus::Unbounded) return {LpStatus::Unbounded, 0, std::move(x)};
  return {LpStatus::Optimal, t.objective_value(), std::move(x)};
}

LpResult lp_feasible(LinearProgram p) {
  p.objective.clear();
  return lp_max(p);
}

}  // namespace ehlcp
