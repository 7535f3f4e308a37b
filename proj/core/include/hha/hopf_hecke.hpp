#pragma once

#include <cstdint>
#include <variant>

#include "hha/clifford.hpp"
#include "hha/group_rep.hpp"

namespace hha {

/// The deformation parameter kappa: V wedge V -> F[G], stored on basis pairs
/// i < j and extended antisymmetrically.
struct Kappa {
  int dim = 0;
  int group_order = 0;
  std::vector<GroupAlgebraElement> vals;  // indexed by pair_index(i, j), i < j

  static Kappa zero(int dim, int group_order);

  int pair_index(int i, int j) const;  // requires i < j
  /// kappa(e_i wedge e_j) for any i != j (antisymmetry applied).
  GroupAlgebraElement value(int i, int j) const;
  bool is_zero() const;
};

/// Antisymmetry is structural; this checks G-equivariance:
/// adjoint_g(kappa(u wedge v)) = kappa(rho(g)u wedge rho(g)v).
CheckReport validate_kappa(const OrthogonalRep& rep, const Kappa& kappa);

/// PBW basis key: monomial exponents on the scenario basis of V times a
/// group element. Ordered by total degree, then exponents, then group index.
struct PBWKey {
  std::vector<std::uint32_t> exp;
  int g = 0;

  int degree() const;
  bool operator<(const PBWKey& o) const;
  bool operator==(const PBWKey& o) const { return exp == o.exp && g == o.g; }
};

/// Element of A in PBW normal form on the S(V) (x) F[G] basis.
class AlgebraElement {
 public:
  const std::map<PBWKey, ExtScalar>& terms() const { return terms_; }
  void add_term(const PBWKey& k, const ExtScalar& c);
  ExtScalar coeff(const PBWKey& k) const;

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // filtration degree; -1 for zero
  /// Terms of exact total degree d.
  AlgebraElement graded_component(int d) const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement operator*(const ExtScalar& s) const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::map<PBWKey, ExtScalar> terms_;
};

/// A word letter: a group element or a vector of V in scenario coordinates.
struct Letter {
  static Letter group(int g) { return {true, g, {}}; }
  static Letter vec(Vector v) { return {false, 0, std::move(v)}; }
  bool is_group = false;
  int g = 0;
  Vector v;
};
using Word = std::vector<Letter>;

enum class ReduceStrategy { Leftmost, Rightmost };

/// The algebra A = (T(V) x| F[G]) / I_kappa with its rewriting machinery.
class HeckeAlgebra {
 public:
  HeckeAlgebra(std::shared_ptr<const OrthogonalRep> rep, Kappa kappa);

  const OrthogonalRep& rep() const { return *rep_; }
  const std::shared_ptr<const OrthogonalRep>& rep_ptr() const { return rep_; }
  const Kappa& kappa() const { return kappa_; }
  int dim() const { return rep_->dim; }
  int group_order() const { return rep_->group.order(); }

  AlgebraElement zero() const { return {}; }
  AlgebraElement one() const;
  AlgebraElement delta(int g) const;
  AlgebraElement generator(int i) const;
  AlgebraElement term(const PBWKey& k) const;
  AlgebraElement from_group_algebra(const GroupAlgebraElement& a) const;

  AlgebraElement rmul_group(const AlgebraElement& a, int g) const;
  AlgebraElement rmul_basis(const AlgebraElement& a, int i) const;
  AlgebraElement rmul_vector(const AlgebraElement& a, const Vector& v) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  /// Conjugation by the group-like delta_g.
  AlgebraElement adjoint(int g, const AlgebraElement& a) const;

  /// Rewrites a word to PBW normal form, resolving reducible positions at the
  /// chosen end first. The two strategies realize the two reduction orders of
  /// a critical pair.
  AlgebraElement normal_form(const Word& w,
                             ReduceStrategy strategy = ReduceStrategy::Leftmost) const;

  /// Casimir element Omega = sum_k v_k v^k for the B-dual pair of the
  /// scenario basis.
  AlgebraElement casimir() const;

 private:
  AlgebraElement mono_rmul_basis(const std::vector<std::uint32_t>& alpha, int k) const;

  std::shared_ptr<const OrthogonalRep> rep_;
  Kappa kappa_;
};

struct PbwFailure {
  std::string kind;    // "equivariance" | "critical-pair" | "dimension-count"
  std::string detail;  // named overlap or violation
};

struct PbwResult {
  bool pass = true;
  std::vector<PbwFailure> failures;
  int overlaps_checked = 0;
};

/// Degree-3 overlap confluence: every word e_k e_j e_i (i <= j <= k) and
/// g e_j e_i reduces to the same normal form under both strategies, plus the
/// kappa equivariance re-check.
PbwResult check_pbw(const HeckeAlgebra& alg);

/// Flatness bookkeeping: the top-degree part of any product of PBW basis
/// elements agrees with the product in S(V) x| F[G], for degrees <= max_degree.
CheckReport pbw_dimension_check(const HeckeAlgebra& alg, int max_degree);

/// Basis of {z : deg z <= max_degree, [z, e_i] = 0, [z, delta_g] = 0}.
std::vector<AlgebraElement> center_basis(const HeckeAlgebra& alg, int max_degree);

/// Enumerates PBW keys with |alpha| <= max_degree (and every group element),
/// in the canonical order.
std::vector<PBWKey> pbw_keys_up_to(const HeckeAlgebra& alg, int max_degree);

/// A finite-dimensional module: matrices for group elements and basis vectors.
struct ModuleAction {
  int dim = 0;
  std::vector<Matrix> group_mats;
  std::vector<Matrix> vector_mats;
};

CheckReport validate_module(const HeckeAlgebra& alg, const ModuleAction& m);
Matrix evaluate(const HeckeAlgebra& alg, const ModuleAction& m, const AlgebraElement& a);
/// The scalar c with m = c I, if m is scalar.
std::optional<ExtScalar> scalar_of(const Matrix& m);
/// chi(z) per center element; throws if some z acts non-scalarly.
std::vector<ExtScalar> central_character(const HeckeAlgebra& alg, const ModuleAction& m,
                                         const std::vector<AlgebraElement>& center);

}  // namespace hha
