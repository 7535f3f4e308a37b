#pragma once

#include <functional>

#include "hha/hopf_hecke.hpp"
#include "hha/pin_cover.hpp"
#include "hha/subspace.hpp"

namespace hha {

/// Basis key of A (x) C: PBW monomial, group element, Clifford subset.
struct ACKey {
  std::vector<std::uint32_t> exp;
  int g = 0;
  std::uint64_t cmask = 0;

  int degree() const;
  int parity() const;
  bool operator<(const ACKey& o) const;
  bool operator==(const ACKey& o) const {
    return exp == o.exp && g == o.g && cmask == o.cmask;
  }
};

class ACElement {
 public:
  const std::map<ACKey, ExtScalar>& terms() const { return terms_; }
  void add_term(const ACKey& k, const ExtScalar& c);
  ExtScalar coeff(const ACKey& k) const;

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // filtration degree, -1 for zero
  /// Z2-degree from the Clifford factor; nullopt when inhomogeneous.
  std::optional<int> parity() const;
  ACElement graded_component(int d) const;
  ACElement parity_component(int p) const;

  ACElement operator-() const;
  ACElement& operator+=(const ACElement& o);
  ACElement& operator-=(const ACElement& o);
  friend ACElement operator+(ACElement a, const ACElement& b) { return a += b; }
  friend ACElement operator-(ACElement a, const ACElement& b) { return a -= b; }
  ACElement operator*(const ExtScalar& s) const;
  bool operator==(const ACElement& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::map<ACKey, ExtScalar> terms_;
};

/// Everything the A (x) C computations need: the algebra, the orthogonalized
/// basis and the pin cover with its quotient H'.
struct DiracContext {
  std::shared_ptr<const HeckeAlgebra> alg;
  OrthoBasisPtr basis;
  std::shared_ptr<const PinCover> cover;
  std::shared_ptr<const HPrime> hprime;

  int dim() const { return alg->dim(); }
  int group_order() const { return alg->group_order(); }
};

DiracContext make_dirac_context(std::shared_ptr<const HeckeAlgebra> alg, OrthoBasisPtr basis);

ACElement ac_from_algebra(const AlgebraElement& a);
ACElement ac_from_clifford(const DiracContext& ctx, const CliffordElement& c);
ACElement ac_one(const DiracContext& ctx);
/// Componentwise product: (a (x) c)(a' (x) c') = aa' (x) cc'.
ACElement ac_mul(const DiracContext& ctx, const ACElement& a, const ACElement& b);

/// D = sum_k v_k (x) v^k for the B-dual pair of the scenario basis.
ACElement dirac(const DiracContext& ctx);
/// D for an arbitrary pair of bases; equal to dirac() whenever the pair is
/// B-dual.
ACElement dirac_from_dual_pair(const DiracContext& ctx, const std::vector<Vector>& vk,
                               const std::vector<Vector>& vk_dual);
/// ac_mul(D, D), verified exactly against Omega (x) 1 + 1/2 sum kappa (x) [.,.].
ACElement dirac_square(const DiracContext& ctx);

/// Delta_C into A (x) C (degree 0) on a cover-coefficient vector.
ACElement delta_c_ac(const DiracContext& ctx, const Vector& cover_coeffs);
ACElement delta_c_ac_basis(const DiracContext& ctx, int cover_idx);

/// Action of a cover basis element: conjugation by Delta_C(g~).
ACElement tih_action(const DiracContext& ctx, int cover_idx, const ACElement& x);

enum class IsotypicPart { Triv, Det };

/// Averaging projector onto the triv/det isotypic subspace.
ACElement project_part(const DiracContext& ctx, const ACElement& x, IsotypicPart part);

/// d(x) = Dx - (-1)^{|x|} xD, applied per parity component.
ACElement d_map(const DiracContext& ctx, const ACElement& x);

/// Coordinate chart on A (x) C keys, filtered (|alpha| <= deg) or graded
/// (|alpha| = deg), optionally restricted to the group-identity component.
class ACChart {
 public:
  static ACChart filtered(const DiracContext& ctx, int max_degree);
  static ACChart graded(const DiracContext& ctx, int degree);
  static ACChart graded_sv_only(const DiracContext& ctx, int degree);

  int dim() const { return int(keys_.size()); }
  const std::vector<ACKey>& keys() const { return keys_; }
  Vector coords(const ACElement& x) const;  // throws if x is outside the chart
  bool contains(const ACElement& x) const;
  ACElement element(const Vector& v) const;
  /// Matrix of a linear map given by images of the chart basis, expressed on
  /// a codomain chart.
  static Matrix map_matrix(const ACChart& domain, const ACChart& codomain,
                           const std::function<ACElement(const ACElement&)>& f);

 private:
  std::vector<ACKey> keys_;
  std::map<ACKey, int> index_;
};

/// Graded image of d on the associated graded algebra: the degree-(i+1)
/// component of d applied to the canonical lift.
ACElement d_bar(const DiracContext& ctx, const ACElement& graded_x);

/// Conjugation by a cover element on the associated graded algebra
/// S(V) x| F[G] (x) C (symmetric action on the monomial part).
ACElement graded_cover_conjugation(const DiracContext& ctx, int cover_idx, const ACKey& key);

struct DegreeHomology {
  int degree = 0;
  int ker_dim = 0, im_dim = 0, delta_dim = 0;
  bool direct_sum_ok = false;
  int ker_triv_dim = 0, im_det_dim = 0, delta_center_dim = 0;
  bool refined_ok = false;
  int koszul_ker_dim = 0, koszul_im_dim = 0;
  bool koszul_ok = false;
};

struct HomologyReport {
  bool pass = true;
  std::vector<DegreeHomology> degrees;
  std::string witness;
};

/// Checks ker d-bar = im d-bar (+) Delta_C(H~) per graded degree, the
/// triv/det refinement with Delta_C(Z(H~)), and Koszul acyclicity on the
/// S(V) (x) C part, all as exact subspace identities.
HomologyReport graded_homology_check(const DiracContext& ctx, int max_degree);

struct FilteredHomology {
  int degree = 0;
  bool im_det_meets_f0_trivially = false;
  bool truncated_kernel_ok = false;
  int ker_triv_dim = 0;
};

/// Ungraded statements at truncated filtration degree: im d_det cap F_0 = 0
/// and ker d_triv cap F_i = d(det cap F_{i-1}) (+) Delta_C(Z(H~)).
std::vector<FilteredHomology> filtered_homology_check(const DiracContext& ctx, int max_degree);

struct ParthasarathyResult {
  bool ok = false;
  Vector htilde;   // cover coefficients with D^2 - Delta_C(htilde) central
  ACElement central_part;
  std::string witness;
};

/// Solves for an even cover combination making z = D^2 - Delta_C(h~) central,
/// then re-verifies the decomposition by direct multiplication.
ParthasarathyResult parthasarathy_check(const DiracContext& ctx);

enum class CarrierMode { Regular, Isotropic };

/// The Clifford-side carrier: C itself (regular) or the spin module
/// S = C / C W for a maximal isotropic W (isotropic mode).
struct Carrier {
  CarrierMode mode = CarrierMode::Regular;
  int dim = 0;
  std::vector<std::uint64_t> rep_masks;  // monomial coset representatives
  SubspaceBasis ideal;                   // zero subspace in regular mode
  std::vector<Matrix> left_mul;          // action of f_S for every mask S

  Matrix act_mask(std::uint64_t mask) const { return left_mul[mask]; }
};

Carrier make_regular_carrier(const DiracContext& ctx);
Carrier make_isotropic_carrier(const DiracContext& ctx, const Matrix& w_rows);

/// Rank of C -> End(carrier); equals 2^n exactly when the carrier is faithful
/// and the image spans the full matrix algebra.
int carrier_image_rank(const DiracContext& ctx, const Carrier& carrier);

/// Matrix of an A (x) C element on M (x) carrier.
Matrix carrier_act(const DiracContext& ctx, const ModuleAction& module, const Carrier& carrier,
                   const ACElement& x);

struct CohomologyResult {
  int total_dim = 0;
  CarrierMode mode = CarrierMode::Regular;
  int spin_multiplicity = 1;  // regular mode: number of spin copies when C is split
  SubspaceBasis ker;
  SubspaceBasis im_cap_ker;
  int hd_dim = 0;
  std::vector<Vector> reps;            // coset representatives of H^D(M)
  std::vector<Matrix> hprime_action;   // per H' basis element, on the reps
};

CohomologyResult dirac_cohomology(const DiracContext& ctx, const ModuleAction& module,
                                  const Carrier& carrier);

struct KernelCohomology {
  int hd_dim = 0;
  std::vector<ExtScalar> min_poly;  // of D on M (x) carrier, low to high, monic
};

/// When the minimal polynomial of D is square-free, H^D(M) = ker D^2; returns
/// nullopt otherwise.
std::optional<KernelCohomology> cohomology_via_kernel(const DiracContext& ctx,
                                                      const ModuleAction& module,
                                                      const Carrier& carrier);

struct ZetaResult {
  Vector hprime_coeffs;  // zeta(z) on the H' basis
  ACElement certificate; // a with z (x) 1 = Delta_C(zeta(z)) + Da + aD
  int bound_used = 0;
};

/// Solves z (x) 1 - Delta_C(h~) = Da + aD with a odd and det-isotypic of
/// filtration degree <= deg z - 1 (+ retries), and re-verifies the identity.
ZetaResult zeta(const DiracContext& ctx, const AlgebraElement& z, int retry_limit);

struct VoganBlockVerdict {
  int block = 0;
  int block_dim = 0;
  bool conclusive = true;
  bool match = false;
  std::string detail;
};

struct VoganReport {
  bool vacuous = false;       // H^D(M) = 0
  bool all_pass = true;
  int hd_dim = 0;
  std::vector<std::vector<VoganBlockVerdict>> per_z;  // [z index][block]
};

/// chi(z) = sigma(zeta(z)) on every Z(H')-isotypic block of H^D(M).
VoganReport vogan_verify(const DiracContext& ctx, const ModuleAction& module,
                         const Carrier& carrier, const std::vector<AlgebraElement>& center,
                         int zeta_retry_limit);

/// Minimal polynomial of a square matrix, monic, coefficients low to high.
std::vector<ExtScalar> minimal_polynomial(const Matrix& m);
bool poly_is_squarefree(const std::vector<ExtScalar>& p);

}  // namespace hha
