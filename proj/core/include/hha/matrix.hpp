#pragma once

#include <optional>
#include <vector>

#include "hha/ext_scalar.hpp"

namespace hha {

using Vector = std::vector<ExtScalar>;

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const ExtScalar& s, const Vector& v);
bool is_zero(const Vector& v);

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  ExtScalar& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const ExtScalar& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  Matrix transpose() const;
  Vector row(int i) const;
  Vector col(int j) const;
  void set_row(int i, const Vector& v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const ExtScalar& s) const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

  Vector apply(const Vector& v) const;  // matrix * column vector

  /// Stacks rows of b below this.
  Matrix vstack(const Matrix& b) const;
  /// Appends columns of b to the right.
  Matrix hstack(const Matrix& b) const;

 private:
  int rows_, cols_;
  std::vector<ExtScalar> a_;
};

struct RrefResult {
  Matrix m;
  std::vector<int> pivots;
  int rank = 0;
};

RrefResult rref(Matrix m);

/// Rows span the null space {x : m x = 0}; dim = cols - rank.
Matrix kernel_matrix(const Matrix& m);

/// Some x with m x = rhs (free variables zero), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

std::optional<Matrix> inverse(const Matrix& m);

ExtScalar det(Matrix m);

}  // namespace hha
