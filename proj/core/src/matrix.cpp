#include "hha/matrix.hpp"

namespace hha {

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const ExtScalar& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = ExtScalar(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::row(int i) const {
  Vector r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

Vector Matrix::col(int j) const {
  Vector c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void Matrix::set_row(int i, const Vector& v) {
  if (int(v.size()) != cols_) throw Error("row length mismatch");
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const ExtScalar& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const ExtScalar& bkj = o(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::operator*(const ExtScalar& s) const {
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vector Matrix::apply(const Vector& v) const {
  if (int(v.size()) != cols_) throw Error("vector length mismatch in apply");
  Vector r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

Matrix Matrix::vstack(const Matrix& b) const {
  if (rows_ == 0 && cols_ == 0) return b;
  if (b.rows_ == 0 && b.cols_ == 0) return *this;
  if (cols_ != b.cols_) throw Error("vstack column mismatch");
  Matrix r(rows_ + b.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(rows_ + i, j) = b(i, j);
  return r;
}

Matrix Matrix::hstack(const Matrix& b) const {
  if (rows_ != b.rows_) throw Error("hstack row mismatch");
  Matrix r(rows_, cols_ + b.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int j = 0; j < b.cols_; ++j) r(i, cols_ + j) = b(i, j);
  }
  return r;
}

RrefResult rref(Matrix m) {
  RrefResult res;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int piv = -1;
    for (int i = lead; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(lead, j));
    ExtScalar inv = m(lead, col).inverse();
    for (int j = col; j < m.cols(); ++j) m(lead, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, col).is_zero()) continue;
      ExtScalar f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(lead, j);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = int(res.pivots.size());
  res.m = std::move(m);
  return res;
}

Matrix kernel_matrix(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(int(free_cols.size()), m.cols());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    k(int(fi), f) = ExtScalar(1);
    for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
      k(int(fi), r.pivots[pi]) = -r.m(int(pi), f);
  }
  return k;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (int(rhs.size()) != m.rows()) throw Error("rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  RrefResult r = rref(std::move(aug));
  Vector x(m.cols());
  for (std::size_t pi = 0; pi < r.pivots.size(); ++pi) {
    if (r.pivots[pi] == m.cols()) return std::nullopt;  // pivot in rhs column
    x[r.pivots[pi]] = r.m(int(pi), m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  int n = m.rows();
  Matrix aug = m.hstack(Matrix::identity(n));
  RrefResult r = rref(std::move(aug));
  if (r.rank < n) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (r.pivots[i] != i) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
  return inv;
}

ExtScalar det(Matrix m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  int n = m.rows();
  ExtScalar d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return ExtScalar(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    ExtScalar inv = m(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      ExtScalar f = m(i, col) * inv;
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

}  // namespace hha
