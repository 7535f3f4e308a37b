#pragma once

#include "hha/matrix.hpp"

namespace hha {

/// A subspace of F^n stored as the reduced row echelon basis of its span,
/// so equal subspaces have identical representations.
class SubspaceBasis {
 public:
  SubspaceBasis() : ambient_(0) {}
  explicit SubspaceBasis(int ambient) : ambient_(ambient), rows_(0, ambient) {}

  static SubspaceBasis from_rows(const Matrix& rows);
  static SubspaceBasis from_vectors(int ambient, const std::vector<Vector>& vs);
  static SubspaceBasis full(int ambient) { return from_rows(Matrix::identity(ambient)); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return rows_.rows(); }
  const Matrix& basis() const { return rows_; }
  Vector basis_vector(int i) const { return rows_.row(i); }

  bool contains(const Vector& v) const;
  bool contains(const SubspaceBasis& other) const;
  /// Residue of v after reduction against the echelon basis.
  Vector reduce(const Vector& v) const;
  /// Coordinates of v on the echelon basis, if v lies in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;

  bool operator==(const SubspaceBasis& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

 private:
  int ambient_;
  Matrix rows_;
};

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b);
int quotient_dim(const SubspaceBasis& a, const SubspaceBasis& b);

/// Null space of m as a subspace; dim = cols - rank.
SubspaceBasis kernel_basis(const Matrix& m);

}  // namespace hha
