#pragma once

#include "hha/clifford.hpp"
#include "hha/subspace.hpp"

namespace hha {

/// An element of H (x) C(V): coefficients on (group element, Clifford subset).
class HCElement {
 public:
  using Key = std::pair<int, std::uint64_t>;

  const std::map<Key, ExtScalar>& coeffs() const { return coeffs_; }
  ExtScalar coeff(int g, std::uint64_t mask) const;
  void add(int g, std::uint64_t mask, const ExtScalar& c);

  bool is_zero() const { return coeffs_.empty(); }
  HCElement operator-() const;
  HCElement& operator+=(const HCElement& o);
  HCElement& operator-=(const HCElement& o);
  friend HCElement operator+(HCElement a, const HCElement& b) { return a += b; }
  friend HCElement operator-(HCElement a, const HCElement& b) { return a -= b; }
  HCElement operator*(const ExtScalar& s) const;
  bool operator==(const HCElement& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::map<Key, ExtScalar> coeffs_;
};

HCElement hc_mul(const FiniteGroup& group, const OrthoBasisPtr& basis, const HCElement& a,
                 const HCElement& b);

/// The pin cover of H = F[G]: the sign double cover defined by the pin-lift
/// cocycle, with projection pi, lift gamma into C(V)^x and the det grading.
/// Cover element (g, eps) has index g for eps = +1 and g + |G| for eps = -1.
struct PinCover {
  std::shared_ptr<const OrthogonalRep> rep;
  OrthoBasisPtr basis;
  PinLift lift;
  FiniteGroup cover;

  int base_order() const { return rep->group.order(); }
  int cover_order() const { return cover.order(); }
  int index(int g, int sign) const { return sign > 0 ? g : g + base_order(); }
  int pi(int idx) const { return idx % base_order(); }
  int sign(int idx) const { return idx < base_order() ? 1 : -1; }
  int grading(int idx) const { return rep->z2_grade(pi(idx)); }
  CliffordElement gamma(int idx) const;

  /// Diagonal map on a linear combination of cover basis elements:
  /// (g, eps) -> eps (delta_g (x) c_g), extended linearly.
  HCElement delta_c(const Vector& cover_coeffs) const;
  HCElement delta_c_basis(int idx) const;
};

/// Builds the cover and verifies all structural invariants exactly:
/// cover associativity, two-to-one projection, gradation preservation and
/// the twisted intertwining equation on every (cover element, basis vector).
PinCover build_pin_cover(std::shared_ptr<const OrthogonalRep> rep, OrthoBasisPtr basis);

/// H' = H~ / ker Delta_C with its multiplication and center, all computed by
/// exact linear algebra on the coefficient matrix of Delta_C.
struct HPrime {
  int dim = 0;                     // = |G|
  int identity_index = 0;          // index of the group identity in the basis
  SubspaceBasis kernel;            // ker Delta_C in cover coordinates (2|G|)
  std::vector<std::vector<Vector>> structure;  // [g][h] -> coords over basis [k]
  std::vector<Vector> center;      // basis of Z(H'), coords over the H' basis

  Vector mul(const Vector& a, const Vector& b) const;
  Vector one() const;
};

HPrime compute_h_prime(const PinCover& cover);

/// Section signs sigma with sigma(g)sigma(h)sigma(gh) = mu(g,h), if any,
/// found as a linear system over the two-element field.
std::optional<std::vector<int>> detect_splitting(const PinCover& cover);

}  // namespace hha
