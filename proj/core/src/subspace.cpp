#include "hha/subspace.hpp"

namespace hha {

SubspaceBasis SubspaceBasis::from_rows(const Matrix& rows) {
  SubspaceBasis s(rows.cols());
  RrefResult r = rref(rows);
  Matrix nz(r.rank, rows.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < rows.cols(); ++j) nz(i, j) = r.m(i, j);
  s.rows_ = std::move(nz);
  return s;
}

SubspaceBasis SubspaceBasis::from_vectors(int ambient, const std::vector<Vector>& vs) {
  Matrix m(int(vs.size()), ambient);
  for (std::size_t i = 0; i < vs.size(); ++i) m.set_row(int(i), vs[i]);
  return from_rows(m);
}

Vector SubspaceBasis::reduce(const Vector& v) const {
  if (int(v.size()) != ambient_) throw Error("ambient dimension mismatch");
  Vector r = v;
  // rows are in RREF: pivot of row i is the first nonzero column
  for (int i = 0; i < rows_.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!rows_(i, j).is_zero()) {
        p = j;
        break;
      }
    if (p < 0 || r[p].is_zero()) continue;
    ExtScalar f = r[p];  // pivot entry is 1
    for (int j = 0; j < ambient_; ++j) r[j] -= f * rows_(i, j);
  }
  return r;
}

bool SubspaceBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vector> SubspaceBasis::coordinates(const Vector& v) const {
  if (int(v.size()) != ambient_) throw Error("ambient dimension mismatch");
  Vector r = v;
  Vector coords(dim());
  for (int i = 0; i < rows_.rows(); ++i) {
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!rows_(i, j).is_zero()) {
        p = j;
        break;
      }
    if (p < 0 || r[p].is_zero()) continue;
    coords[i] = r[p];
    ExtScalar f = r[p];
    for (int j = 0; j < ambient_; ++j) r[j] -= f * rows_(i, j);
  }
  if (!is_zero(r)) return std::nullopt;
  return coords;
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("ambient dimension mismatch");
  return SubspaceBasis::from_rows(a.basis().vstack(b.basis()));
}

SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("ambient dimension mismatch");
  // v in rowspace(M) iff v is orthogonal (standard dot) to ker(M): rank duality
  Matrix ka = kernel_matrix(a.basis());
  Matrix kb = kernel_matrix(b.basis());
  Matrix constraints = ka.vstack(kb);
  if (constraints.rows() == 0) return SubspaceBasis::full(a.ambient_dim());
  return SubspaceBasis::from_rows(kernel_matrix(constraints));
}

int quotient_dim(const SubspaceBasis& a, const SubspaceBasis& b) {
  return a.dim() - subspace_intersection(a, b).dim();
}

SubspaceBasis kernel_basis(const Matrix& m) {
  return SubspaceBasis::from_rows(kernel_matrix(m));
}

}  // namespace hha
