#pragma once

#include <initializer_list>
#include <optional>

#include "ehlcp/rational.hpp"

namespace ehlcp {

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix diagonal(const Vec& diag);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec col(int j) const;
  void set_col(int j, const Vec& v);
  Vec diag() const;
  Matrix transposed() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const Matrix& o) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Exact determinant via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix. Throws on non-square input.
Rational det(const Matrix& m);

/// Exact solve of a*x = b. Returns nullopt when a is singular (no unique
/// solution, whether or not the system is consistent).
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);

/// Exact inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace ehlcp
