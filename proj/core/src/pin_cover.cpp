#include "hha/pin_cover.hpp"

#include "hha/gf2.hpp"

namespace hha {

ExtScalar HCElement::coeff(int g, std::uint64_t mask) const {
  auto it = coeffs_.find({g, mask});
  return it == coeffs_.end() ? ExtScalar() : it->second;
}

void HCElement::add(int g, std::uint64_t mask, const ExtScalar& c) {
  if (c.is_zero()) return;
  Key k{g, mask};
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) {
    coeffs_[k] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HCElement HCElement::operator-() const {
  HCElement r = *this;
  for (auto& [k, c] : r.coeffs_) c = -c;
  return r;
}

HCElement& HCElement::operator+=(const HCElement& o) {
  for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
  return *this;
}

HCElement& HCElement::operator-=(const HCElement& o) {
  for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, -c);
  return *this;
}

HCElement HCElement::operator*(const ExtScalar& s) const {
  HCElement r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : coeffs_) r.coeffs_[k] = c * s;
  return r;
}

HCElement hc_mul(const FiniteGroup& group, const OrthoBasisPtr& basis, const HCElement& a,
                 const HCElement& b) {
  HCElement r;
  for (const auto& [ka, ca] : a.coeffs()) {
    for (const auto& [kb, cb] : b.coeffs()) {
      CliffordElement x(basis), y(basis);
      x.set_coeff(ka.second, ca);
      y.set_coeff(kb.second, cb);
      CliffordElement prod = cl_mul(x, y);
      int g = group.mul(ka.first, kb.first);
      for (const auto& [m, c] : prod.coeffs()) r.add(g, m, c);
    }
  }
  return r;
}

CliffordElement PinCover::gamma(int idx) const {
  CliffordElement c = lift.c[pi(idx)];
  return sign(idx) > 0 ? c : -c;
}

HCElement PinCover::delta_c_basis(int idx) const {
  HCElement r;
  int g = pi(idx);
  for (const auto& [m, c] : lift.c[g].coeffs())
    r.add(g, m, sign(idx) > 0 ? c : -c);
  return r;
}

HCElement PinCover::delta_c(const Vector& cover_coeffs) const {
  if (int(cover_coeffs.size()) != cover_order()) throw Error("cover coefficient length mismatch");
  HCElement r;
  for (int i = 0; i < cover_order(); ++i) {
    if (cover_coeffs[i].is_zero()) continue;
    r += delta_c_basis(i) * cover_coeffs[i];
  }
  return r;
}

PinCover build_pin_cover(std::shared_ptr<const OrthogonalRep> rep, OrthoBasisPtr basis) {
  PinCover pc;
  pc.rep = std::move(rep);
  pc.basis = std::move(basis);
  pc.lift = pin_lift(*pc.rep, pc.basis);

  const FiniteGroup& g = pc.rep->group;
  int n = g.order();
  // cover multiplication (g,e)(h,e') = (gh, e e' mu(g,h)); associativity of
  // this table is exactly the cocycle condition, checked by FiniteGroup::build
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b) {
      int ga = a % n, gb = b % n;
      int sa = a < n ? 1 : -1, sb = b < n ? 1 : -1;
      int s = sa * sb * pc.lift.mu[ga][gb];
      int gh = g.mul(ga, gb);
      table[a][b] = s > 0 ? gh : gh + n;
    }
  pc.cover = FiniteGroup::build(table);

  // pi is a homomorphism with kernel {(e,+1),(e,-1)} by construction; verify
  // the intertwining equation and gradation preservation exactly
  for (int idx = 0; idx < 2 * n; ++idx) {
    CliffordElement gamma = pc.gamma(idx);
    auto par = gamma.parity();
    if (!par || *par != pc.grading(idx))
      throw Error("internal: gamma does not preserve the Z2-gradation");
    CliffordElement gamma_inv = pc.lift.c_inv[pc.pi(idx)];
    if (pc.sign(idx) < 0) gamma_inv = -gamma_inv;
    for (int j = 0; j < pc.rep->dim; ++j) {
      Vector ej(pc.rep->dim);
      ej[j] = ExtScalar(1);
      Vector lhs = pc.rep->rho[pc.pi(idx)].apply(ej);
      if (pc.grading(idx)) lhs = ExtScalar(-1) * lhs;
      auto vp = vector_part(cl_mul(cl_mul(gamma, embed_vector(pc.basis, ej)), gamma_inv));
      if (!vp || !(*vp == lhs)) throw Error("internal: pin cover equation failed");
    }
  }
  return pc;
}

Vector HPrime::mul(const Vector& a, const Vector& b) const {
  if (int(a.size()) != dim || int(b.size()) != dim) throw Error("H' coefficient length mismatch");
  Vector r(dim);
  for (int g = 0; g < dim; ++g) {
    if (a[g].is_zero()) continue;
    for (int h = 0; h < dim; ++h) {
      if (b[h].is_zero()) continue;
      const Vector& sc = structure[g][h];
      for (int k = 0; k < dim; ++k)
        if (!sc[k].is_zero()) r[k] += a[g] * b[h] * sc[k];
    }
  }
  return r;
}

Vector HPrime::one() const {
  Vector r(dim);
  r[identity_index] = ExtScalar(1);
  return r;
}

namespace {

// dense coordinates of an H (x) C element on (group, mask) pairs
Vector hc_coords(const HCElement& x, int group_order, int n_cliff) {
  std::uint64_t size = std::uint64_t(1) << n_cliff;
  Vector v(std::size_t(group_order) * size);
  for (const auto& [k, c] : x.coeffs()) v[std::size_t(k.first) * size + k.second] = c;
  return v;
}

}  // namespace

HPrime compute_h_prime(const PinCover& cover) {
  const FiniteGroup& g = cover.rep->group;
  int n = g.order();
  int nc = cover.basis->dim();
  std::uint64_t csize = std::uint64_t(1) << nc;

  // kernel of the 2|G| x (|G| 2^n) coefficient matrix of Delta_C
  Matrix coeff(2 * n, int(std::size_t(n) * csize));
  for (int idx = 0; idx < 2 * n; ++idx)
    coeff.set_row(idx, hc_coords(cover.delta_c_basis(idx), n, nc));
  HPrime hp;
  hp.identity_index = g.identity();
  // rows of `coeff` are the images, so ker Delta_C is the left kernel
  hp.kernel = SubspaceBasis::from_rows(kernel_matrix(coeff.transpose()));
  if (hp.kernel.dim() != n)
    throw Error("internal: ker Delta_C has dimension " + std::to_string(hp.kernel.dim()) +
                ", expected " + std::to_string(n));

  hp.dim = 2 * n - hp.kernel.dim();
  // coset representatives: images of (g, +1); verify they are independent
  std::vector<Vector> images(n);
  for (int i = 0; i < n; ++i) images[i] = hc_coords(cover.delta_c_basis(i), n, nc);
  SubspaceBasis image_space = SubspaceBasis::from_vectors(int(images[0].size()), images);
  if (image_space.dim() != n) throw Error("internal: H' coset representatives dependent");

  // structure constants by expressing each product in the representative images
  Matrix img_mat(n, int(images[0].size()));
  for (int i = 0; i < n; ++i) img_mat.set_row(i, images[i]);
  Matrix img_t = img_mat.transpose();
  hp.structure.assign(n, std::vector<Vector>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      HCElement prod =
          hc_mul(g, cover.basis, cover.delta_c_basis(a), cover.delta_c_basis(b));
      auto sol = solve(img_t, hc_coords(prod, n, nc));
      if (!sol) throw Error("internal: H' product left the span of representatives");
      hp.structure[a][b] = *sol;
    }

  // center via the centralizer linear system in the quotient
  Matrix sys(n * n, n);
  for (int h = 0; h < n; ++h)
    for (int k = 0; k < n; ++k)
      for (int gidx = 0; gidx < n; ++gidx)
        sys(h * n + k, gidx) = hp.structure[gidx][h][k] - hp.structure[h][gidx][k];
  Matrix cz = kernel_matrix(sys);
  for (int i = 0; i < cz.rows(); ++i) hp.center.push_back(cz.row(i));
  return hp;
}

std::optional<std::vector<int>> detect_splitting(const PinCover& cover) {
  const FiniteGroup& g = cover.rep->group;
  int n = g.order();
  Gf2System sys;
  sys.nvars = n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<std::uint8_t> row(n, 0);
      row[a] ^= 1;
      row[b] ^= 1;
      row[g.mul(a, b)] ^= 1;
      sys.add_equation(std::move(row), cover.lift.mu[a][b] < 0 ? 1 : 0);
    }
  auto sol = gf2_solve(sys);
  if (!sol) return std::nullopt;
  std::vector<int> signs(n);
  for (int i = 0; i < n; ++i) signs[i] = (*sol)[i] ? -1 : 1;
  return signs;
}

}  // namespace hha
