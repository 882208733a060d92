#include "ehlcp/matclass.hpp"

#include "ehlcp/linprog.hpp"

namespace ehlcp {

const char* to_string(Status s) {
  switch (s) {
    case Status::Yes: return "Yes";
    case Status::No: return "No";
    default: return "Unknown";
  }
}

bool is_Z(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("is_Z: matrix not square");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && m.at(i, j) > 0) return false;
  return true;
}

bool reverifies_not_P(const Matrix& m, const Vec& x) {
  if (is_zero(x)) return false;
  const Vec mx = m * x;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] * mx[i] > 0) return false;
  return true;
}

bool reverifies_not_SSM(const Matrix& m, const Vec& x) {
  return all_nonneg(x) && reverifies_not_P(m, x);
}

namespace {

Matrix principal_submatrix(const Matrix& m, const std::vector<int>& idx) {
  Matrix s(int(idx.size()), int(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) s.at(int(i), int(j)) = m.at(idx[i], idx[j]);
  return s;
}

std::vector<int> subset_indices(unsigned mask, int n) {
  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) idx.push_back(i);
  return idx;
}

// Search for nonzero x with x_i (Mx)_i <= 0 for all i: one LP per sign
// pattern s, constraining s_i x_i >= 0, s_i (Mx)_i <= 0, sum s_i x_i = 1.
std::optional<Vec> sign_reversal_witness(const Matrix& m) {
  const int n = m.rows();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    LinearProgram lp;
    lp.num_vars = n;
    Vec norm(n);
    for (int i = 0; i < n; ++i) {
      const Rational s = (mask & (1u << i)) ? -1 : 1;
      Vec sign_row(n);
      sign_row[i] = -s;
      lp.add_le(std::move(sign_row), 0);  // s_i x_i >= 0
      Vec mx_row(n);
      for (int j = 0; j < n; ++j) mx_row[j] = s * m.at(i, j);
      lp.add_le(std::move(mx_row), 0);  // s_i (Mx)_i <= 0
      norm[i] = s;
    }
    lp.add_eq(std::move(norm), 1);
    const LpResult r = lp_feasible(lp);
    if (r.status == LpStatus::Optimal) return r.witness;
  }
  return std::nullopt;
}

}  // namespace

ClassVerdict is_P(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("is_P: matrix not square");
  const int n = m.rows();
  bool all_positive_minors = true;
  for (unsigned mask = 1; mask < (1u << n) && all_positive_minors; ++mask) {
    if (det(principal_submatrix(m, subset_indices(mask, n))) <= 0) all_positive_minors = false;
  }
  if (all_positive_minors) return {Status::Yes, std::nullopt};

  auto witness = sign_reversal_witness(m);
  if (!witness || !reverifies_not_P(m, *witness))
    throw std::logic_error("is_P: minor test and witness search disagree");
  return {Status::No, std::move(witness)};
}

ClassVerdict is_SSM(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("is_SSM: matrix not square");
  const int n = m.rows();
  // Support enumeration; for each nonempty alpha maximize the margin t in
  // { x_alpha >= t, sum x_alpha = 1, (Mx)_alpha <= 0, x off alpha = 0 }.
  // A strictly positive optimum exposes a witness.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const auto idx = subset_indices(mask, n);
    LinearProgram lp;
    lp.num_vars = n + 1;  // x, then t
    Vec obj(n + 1);
    obj[n] = 1;
    lp.objective = std::move(obj);
    Vec norm(n + 1);
    for (int i : idx) {
      Vec margin(n + 1);
      margin[i] = -1;
      margin[n] = 1;
      lp.add_le(std::move(margin), 0);  // t - x_i <= 0
      Vec mx_row(n + 1);
      for (int j : idx) mx_row[j] = m.at(i, j);
      lp.add_le(std::move(mx_row), 0);  // (Mx)_i <= 0 on the support
      norm[i] = 1;
    }
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) {
        Vec zero_row(n + 1);
        zero_row[i] = 1;
        lp.add_eq(std::move(zero_row), 0);
      }
    }
    lp.add_eq(std::move(norm), 1);
    const LpResult r = lp_max(lp);
    if (r.status == LpStatus::Optimal && r.value > 0) {
      Vec witness(r.witness.begin(), r.witness.begin() + n);
      if (!reverifies_not_SSM(m, witness))
        throw std::logic_error("is_SSM: margin witness fails re-verification");
      return {Status::No, std::move(witness)};
    }
  }
  return {Status::Yes, std::nullopt};
}

ClassVerdict is_M_matrix(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("is_M_matrix: matrix not square");
  if (!is_Z(m)) return {Status::No, std::nullopt};
  const auto inv = inverse(m);
  if (!inv) return {Status::No, std::nullopt};
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (inv->at(i, j) < 0) return {Status::No, std::nullopt};
  return {Status::Yes, std::nullopt};
}

MatrixClassReport classify(const Matrix& m) {
  MatrixClassReport r;
  r.is_z = is_Z(m);
  r.p = is_P(m);
  r.ssm = is_SSM(m);
  r.m = is_M_matrix(m);
  return r;
}

}  // namespace ehlcp
