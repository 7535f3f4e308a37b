#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "hha/group_rep.hpp"
#include "hha/matrix.hpp"

namespace hha {

/// An orthogonalized basis (f_i) for the scenario form: the columns of P are
/// the f_i in scenario coordinates, and P^T B P = diag(q_1..q_n) with all
/// q_i nonzero.
struct OrthoBasis {
  FieldPtr field;
  Matrix gram;   // scenario-basis form B
  Matrix p;      // change of basis, columns = f_i
  Matrix p_inv;
  std::vector<ExtScalar> q;  // norms <f_i, f_i>

  int dim() const { return int(q.size()); }
  /// <v, w> in scenario coordinates.
  ExtScalar form(const Vector& v, const Vector& w) const;
};

using OrthoBasisPtr = std::shared_ptr<const OrthoBasis>;

/// Gram-Schmidt without normalization, pivoting to an anisotropic vector
/// (single basis vector by lowest index, else a pair sum) when needed.
/// Throws on a degenerate form.
OrthoBasisPtr orthogonalize(FieldPtr field, const Matrix& gram);

/// Element of C(V): coefficients on ordered products f_S over subsets S.
class CliffordElement {
 public:
  CliffordElement() = default;
  explicit CliffordElement(OrthoBasisPtr basis) : basis_(std::move(basis)) {}

  static CliffordElement scalar(OrthoBasisPtr basis, const ExtScalar& c);
  static CliffordElement generator(OrthoBasisPtr basis, int i);

  const OrthoBasisPtr& basis() const { return basis_; }
  const std::map<std::uint64_t, ExtScalar>& coeffs() const { return coeffs_; }
  ExtScalar coeff(std::uint64_t mask) const;
  void set_coeff(std::uint64_t mask, const ExtScalar& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Z2-degree: 0, 1, or nullopt when not homogeneous.
  std::optional<int> parity() const;
  int max_grade() const;

  CliffordElement operator-() const;
  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  CliffordElement operator*(const ExtScalar& s) const;

  bool operator==(const CliffordElement& o) const { return coeffs_ == o.coeffs_; }

  std::string str() const;

 private:
  OrthoBasisPtr basis_;
  std::map<std::uint64_t, ExtScalar> coeffs_;  // no zero entries
};

/// Product in C(V): transpositions of distinct generators contribute -1,
/// repeated generators contract to the norm q_i.
CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b);

/// Inverse of an invertible Clifford element, via the left-multiplication
/// operator; nullopt when singular.
std::optional<CliffordElement> cl_inverse(const CliffordElement& a);

/// Degree-1 embedding of a scenario-coordinate vector.
CliffordElement embed_vector(const OrthoBasisPtr& basis, const Vector& v);

/// Scenario coordinates of a degree-1 element; nullopt if other grades occur.
std::optional<Vector> vector_part(const CliffordElement& a);

/// Matrix of left multiplication by a on the 2^n monomial basis, ordered by mask.
Matrix left_mul_matrix(const CliffordElement& a);

/// Cartan-Dieudonne: anisotropic vectors v_1..v_k (scenario coordinates) with
/// tau_{v_1} ... tau_{v_k} = O. Each step fixes one orthogonal basis vector,
/// emitting two reflections when the single-reflection difference is isotropic.
std::vector<Vector> reflection_factorization(const OrthoBasis& basis, const Matrix& o);

/// tau_v(w) = w - 2(<v,w>/<v,v>) v as a matrix in scenario coordinates.
Matrix reflection_matrix(const OrthoBasis& basis, const Vector& v);

struct PinLift {
  std::vector<CliffordElement> c;      // lift per group element, c_e = 1
  std::vector<CliffordElement> c_inv;
  std::vector<std::vector<int>> mu;    // sign cocycle, c_g c_h = mu(g,h) c_{gh}
};

/// Lifts every rho(g) to a product of unit-normalized reflection vectors and
/// computes the sign cocycle. The field must contain every sqrt(q(v_i));
/// a central scalar discrepancy outside {+-1} is reported as an error.
PinLift pin_lift(const OrthogonalRep& rep, const OrthoBasisPtr& basis);

/// Matrix of v -> [b, v] on V for a bivector b; skew-adjoint w.r.t. the form.
Matrix phi_biv(const CliffordElement& b);

/// Inverse of phi_biv on so(V): the bivector b with X v = [b, v] for all v.
CliffordElement gamma_L(const OrthoBasisPtr& basis, const Matrix& x);

}  // namespace hha
