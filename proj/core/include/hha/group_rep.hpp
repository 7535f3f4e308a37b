#pragma once

#include "hha/group.hpp"
#include "hha/matrix.hpp"

namespace hha {

/// Outcome of a structural validation; failures carry a witness description.
struct CheckReport {
  bool ok = true;
  std::string witness;

  static CheckReport pass() { return {}; }
  static CheckReport fail(std::string w) { return {false, std::move(w)}; }
};

/// An orthogonal representation: per-element matrices rho(g) preserving a
/// non-degenerate symmetric bilinear form given by the Gram matrix.
struct OrthogonalRep {
  FiniteGroup group;
  int dim = 0;
  std::vector<Matrix> rho;  // one dim x dim matrix per group element
  Matrix gram;

  /// Verifies rho is a homomorphism with rho(e) = I and gram is symmetric
  /// non-degenerate. Throws on failure.
  void validate_structure() const;

  /// Checks rho(g)^T B rho(g) = B for every g (the group-algebra form of the
  /// orthogonality conditions); the first violation is reported.
  CheckReport validate_orthogonality() const;

  /// 0 if det rho(g) = 1, 1 if det rho(g) = -1; anything else is an error.
  int z2_grade(int g) const;
};

using GroupAlgebraElement = Vector;  // coefficient vector of length |G|

GroupAlgebraElement ga_delta(const FiniteGroup& g, int elem);
GroupAlgebraElement ga_mul(const FiniteGroup& g, const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b);
/// Adjoint action of the group-like g: conjugation permutation.
GroupAlgebraElement ga_adjoint(const FiniteGroup& g, int elem, const GroupAlgebraElement& a);

/// Class sums: one basis element of the center of F[G] per conjugacy class.
std::vector<GroupAlgebraElement> center_of_group_algebra(const FiniteGroup& g);

}  // namespace hha
