#include "ehlcp/linalg.hpp"

namespace ehlcp {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  a_.reserve(size_t(rows_) * cols_);
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
  return m;
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_col(int j, const Vec& v) {
  if (int(v.size()) != rows_) throw std::invalid_argument("set_col: length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Vec Matrix::diag() const {
  int n = std::min(rows_, cols_);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = at(i, i);
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix+: shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix-: shape mismatch");
  Matrix r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix*: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Rational& x = at(i, l);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(l, j);
    }
  return r;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("Matrix*vec: length mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Rational det(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row, then run integer Bareiss; the exact
  // determinant is the integer result divided by the product of row scales.
  std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n));
  Rational scale_inv = 1;
  for (int i = 0; i < n; ++i) {
    BigInt l = 1;
    for (int j = 0; j < n; ++j) l = lcm(l, denominator(m.at(i, j)));
    for (int j = 0; j < n; ++j) {
      const Rational& x = m.at(i, j);
      b[i][j] = numerator(x) * (l / denominator(x));
    }
    scale_inv /= Rational(l);
  }

  BigInt prev = 1;
  int det_sign = 1;
  for (int r = 0; r < n - 1; ++r) {
    if (b[r][r] == 0) {
      int p = r + 1;
      while (p < n && b[p][r] == 0) ++p;
      if (p == n) return 0;
      std::swap(b[r], b[p]);
      det_sign = -det_sign;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = r + 1; j < n; ++j) {
        BigInt t = b[i][j] * b[r][r] - b[i][r] * b[r][j];
        b[i][j] = t / prev;  // exact by Bareiss identity
      }
      b[i][r] = 0;
    }
    prev = b[r][r];
  }
  return Rational(det_sign * b[n - 1][n - 1]) * scale_inv;
}

namespace {

// Gauss-Jordan on [a | rhs]; returns false when a is singular.
bool gauss_jordan(Matrix& a, Matrix& rhs) {
  const int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) return false;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      for (int j = 0; j < rhs.cols(); ++j) std::swap(rhs.at(p, j), rhs.at(c, j));
    }
    const Rational piv = a.at(c, c);
    for (int j = 0; j < n; ++j) a.at(c, j) /= piv;
    for (int j = 0; j < rhs.cols(); ++j) rhs.at(c, j) /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      const Rational f = a.at(i, c);
      for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
      for (int j = 0; j < rhs.cols(); ++j) rhs.at(i, j) -= f * rhs.at(c, j);
    }
  }
  return true;
}

}  // namespace

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
  if (!a.square()) throw std::invalid_argument("solve_linear: matrix not square");
  if (int(b.size()) != a.rows()) throw std::invalid_argument("solve_linear: rhs length mismatch");
  Matrix work = a;
  Matrix rhs(a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) rhs.at(i, 0) = b[i];
  if (!gauss_jordan(work, rhs)) return std::nullopt;
  Vec x(a.rows());
  for (int i = 0; i < a.rows(); ++i) x[i] = rhs.at(i, 0);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse: matrix not square");
  Matrix work = m;
  Matrix rhs = Matrix::identity(m.rows());
  if (!gauss_jordan(work, rhs)) return std::nullopt;
  return rhs;
}

std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m.at(i, j));
    }
  }
  return out + "]";
}

}  // namespace ehlcp
