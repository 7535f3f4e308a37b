#include "hha/clifford.hpp"

#include <bit>
#include <sstream>

namespace hha {

namespace {

bool same_basis(const OrthoBasisPtr& a, const OrthoBasisPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->p == b->p && a->gram == b->gram;
}

int popcount(std::uint64_t m) { return std::popcount(m); }

// #{(i,j) in S x T : i > j}
int transposition_count(std::uint64_t s, std::uint64_t t) {
  int count = 0;
  while (t) {
    int j = std::countr_zero(t);
    t &= t - 1;
    count += popcount(s >> (j + 1));
  }
  return count;
}

}  // namespace

ExtScalar OrthoBasis::form(const Vector& v, const Vector& w) const {
  ExtScalar r;
  for (int i = 0; i < gram.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < gram.cols(); ++j)
      if (!gram(i, j).is_zero() && !w[j].is_zero()) r += v[i] * gram(i, j) * w[j];
  }
  return r;
}

OrthoBasisPtr orthogonalize(FieldPtr field, const Matrix& gram) {
  if (!(gram.transpose() == gram)) throw Error("gram matrix not symmetric");
  int n = gram.rows();
  auto form = [&](const Vector& v, const Vector& w) {
    ExtScalar r;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!v[i].is_zero() && !gram(i, j).is_zero() && !w[j].is_zero())
          r += v[i] * gram(i, j) * w[j];
    return r;
  };

  std::vector<Vector> remaining;
  for (int i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = ExtScalar(1);
    remaining.push_back(std::move(e));
  }
  std::vector<Vector> chosen;
  std::vector<ExtScalar> norms;
  while (!remaining.empty()) {
    int pick = -1;
    for (std::size_t i = 0; i < remaining.size(); ++i)
      if (!form(remaining[i], remaining[i]).is_zero()) {
        pick = int(i);
        break;
      }
    Vector f;
    if (pick >= 0) {
      f = remaining[pick];
      remaining.erase(remaining.begin() + pick);
    } else {
      // all candidates isotropic: an anisotropic pair sum exists unless the
      // form is degenerate on the complement
      int pi = -1, pj = -1;
      for (std::size_t i = 0; i < remaining.size() && pi < 0; ++i)
        for (std::size_t j = i + 1; j < remaining.size(); ++j)
          if (!form(remaining[i], remaining[j]).is_zero()) {
            pi = int(i);
            pj = int(j);
            break;
          }
      if (pi < 0) throw Error("degenerate form: orthogonalization failed");
      f = remaining[pi] + remaining[pj];
      remaining.erase(remaining.begin() + pi);
    }
    ExtScalar qf = form(f, f);
    ExtScalar qinv = qf.inverse();
    for (auto& w : remaining) {
      ExtScalar c = form(w, f) * qinv;
      if (!c.is_zero()) w = w - (c * f);
    }
    chosen.push_back(std::move(f));
    norms.push_back(std::move(qf));
  }

  auto basis = std::make_shared<OrthoBasis>();
  basis->field = std::move(field);
  basis->gram = gram;
  basis->p = Matrix(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) basis->p(i, j) = chosen[j][i];
  auto pinv = inverse(basis->p);
  if (!pinv) throw Error("orthogonal basis change not invertible");
  basis->p_inv = std::move(*pinv);
  basis->q = std::move(norms);
  // P^T B P must come out diagonal with the recorded norms
  Matrix d = basis->p.transpose() * gram * basis->p;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(d(i, j) == (i == j ? basis->q[i] : ExtScalar(0))))
        throw Error("internal: orthogonalization did not diagonalize the form");
  return basis;
}

CliffordElement CliffordElement::scalar(OrthoBasisPtr basis, const ExtScalar& c) {
  CliffordElement e(std::move(basis));
  e.set_coeff(0, c);
  return e;
}

CliffordElement CliffordElement::generator(OrthoBasisPtr basis, int i) {
  if (i < 0 || i >= basis->dim()) throw Error("generator index out of range");
  CliffordElement e(std::move(basis));
  e.set_coeff(std::uint64_t(1) << i, ExtScalar(1));
  return e;
}

ExtScalar CliffordElement::coeff(std::uint64_t mask) const {
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? ExtScalar() : it->second;
}

void CliffordElement::set_coeff(std::uint64_t mask, const ExtScalar& c) {
  if (c.is_zero())
    coeffs_.erase(mask);
  else
    coeffs_[mask] = c;
}

std::optional<int> CliffordElement::parity() const {
  if (coeffs_.empty()) return 0;
  int p = popcount(coeffs_.begin()->first) % 2;
  for (const auto& [m, c] : coeffs_)
    if (popcount(m) % 2 != p) return std::nullopt;
  return p;
}

int CliffordElement::max_grade() const {
  int g = 0;
  for (const auto& [m, c] : coeffs_) g = std::max(g, popcount(m));
  return g;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r = *this;
  for (auto& [m, c] : r.coeffs_) c = -c;
  return r;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  if (!basis_) basis_ = o.basis_;
  if (!o.coeffs_.empty() && !same_basis(basis_, o.basis_))
    throw Error("clifford basis mismatch");
  for (const auto& [m, c] : o.coeffs_) {
    auto it = coeffs_.find(m);
    if (it == coeffs_.end()) {
      if (!c.is_zero()) coeffs_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) { return *this += -o; }

CliffordElement CliffordElement::operator*(const ExtScalar& s) const {
  CliffordElement r(basis_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : coeffs_) r.coeffs_[m] = c * s;
  return r;
}

std::string CliffordElement::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < 64; ++i)
      if (mask & (std::uint64_t(1) << i)) os << "*f" << (i + 1);
  }
  return os.str();
}

CliffordElement cl_mul(const CliffordElement& a, const CliffordElement& b) {
  if (!same_basis(a.basis(), b.basis()) && !a.is_zero() && !b.is_zero())
    throw Error("clifford basis mismatch");
  const OrthoBasisPtr& basis = a.basis() ? a.basis() : b.basis();
  CliffordElement r(basis);
  for (const auto& [s, x] : a.coeffs()) {
    for (const auto& [t, y] : b.coeffs()) {
      ExtScalar c = x * y;
      if (transposition_count(s, t) % 2) c = -c;
      std::uint64_t common = s & t;
      std::uint64_t m = common;
      while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        c *= basis->q[i];
      }
      ExtScalar cur = r.coeff(s ^ t);
      r.set_coeff(s ^ t, cur + c);
    }
  }
  return r;
}

Matrix left_mul_matrix(const CliffordElement& a) {
  int n = a.basis()->dim();
  std::uint64_t size = std::uint64_t(1) << n;
  int dim = int(size);
  Matrix m(dim, dim);
  for (std::uint64_t t = 0; t < size; ++t) {
    CliffordElement ft(a.basis());
    ft.set_coeff(t, ExtScalar(1));
    CliffordElement prod = cl_mul(a, ft);
    for (const auto& [s, c] : prod.coeffs()) m(int(s), int(t)) = c;
  }
  return m;
}

std::optional<CliffordElement> cl_inverse(const CliffordElement& a) {
  if (a.is_zero()) return std::nullopt;
  int n = a.basis()->dim();
  std::uint64_t size = std::uint64_t(1) << n;
  int dim = int(size);
  Matrix l = left_mul_matrix(a);
  Vector one(dim);
  one[0] = ExtScalar(1);
  auto x = solve(l, one);
  if (!x) return std::nullopt;
  CliffordElement b(a.basis());
  for (std::uint64_t m = 0; m < size; ++m) b.set_coeff(m, (*x)[m]);
  if (!(cl_mul(b, a) == CliffordElement::scalar(a.basis(), ExtScalar(1)))) return std::nullopt;
  return b;
}

CliffordElement embed_vector(const OrthoBasisPtr& basis, const Vector& v) {
  Vector x = basis->p_inv.apply(v);
  CliffordElement e(basis);
  for (int i = 0; i < basis->dim(); ++i)
    if (!x[i].is_zero()) e.set_coeff(std::uint64_t(1) << i, x[i]);
  return e;
}

std::optional<Vector> vector_part(const CliffordElement& a) {
  const auto& basis = a.basis();
  Vector x(basis->dim());
  for (const auto& [m, c] : a.coeffs()) {
    if (popcount(m) != 1) return std::nullopt;
    x[std::countr_zero(m)] = c;
  }
  return basis->p.apply(x);
}

Matrix reflection_matrix(const OrthoBasis& basis, const Vector& v) {
  ExtScalar qv = basis.form(v, v);
  if (qv.is_zero()) throw Error("reflection vector is isotropic");
  int n = int(v.size());
  Vector bv = basis.gram.apply(v);
  ExtScalar f = ExtScalar(2) * qv.inverse();
  Matrix m = Matrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) -= f * v[i] * bv[j];
  return m;
}

std::vector<Vector> reflection_factorization(const OrthoBasis& basis, const Matrix& o) {
  int n = basis.dim();
  if (!(o.transpose() * basis.gram * o == basis.gram))
    throw Error("matrix does not preserve the form");
  std::vector<Vector> out;
  Matrix current = o;
  for (int k = 0; k < n; ++k) {
    Vector u = basis.p.col(k);
    Vector x = current.apply(u);
    if (x == u) continue;
    Vector w = u - x;
    if (!basis.form(w, w).is_zero()) {
      out.push_back(w);
      current = reflection_matrix(basis, w) * current;
    } else {
      // q(u-x) = 0 forces <u,x> = q_k, so u+x is anisotropic (char 0)
      Vector w2 = u + x;
      if (basis.form(w2, w2).is_zero()) throw Error("internal: correction vector isotropic");
      out.push_back(w2);
      current = reflection_matrix(basis, w2) * current;  // sends x to -u
      out.push_back(u);
      current = reflection_matrix(basis, u) * current;
    }
    if (!(current.apply(u) == u)) throw Error("internal: reflection step did not fix f_k");
  }
  if (!(current == Matrix::identity(n))) throw Error("internal: factorization incomplete");
  return out;
}

PinLift pin_lift(const OrthogonalRep& rep, const OrthoBasisPtr& basis) {
  auto orth = rep.validate_orthogonality();
  if (!orth.ok) throw Error("pin lift requires an orthogonal representation: " + orth.witness);
  int ng = rep.group.order();
  PinLift lift;
  lift.c.resize(ng);
  lift.c_inv.resize(ng);
  CliffordElement one = CliffordElement::scalar(basis, ExtScalar(1));
  for (int g = 0; g < ng; ++g) {
    auto vs = reflection_factorization(*basis, rep.rho[g]);
    int grade = rep.z2_grade(g);
    if (int(vs.size()) % 2 != grade)
      throw Error("internal: reflection count parity disagrees with det grading");
    CliffordElement c = one, cinv = one;
    for (const auto& v : vs) {
      ExtScalar qv = basis->form(v, v);
      auto qr = qv.as_rational();
      auto root = qr ? sqrt_in_field(basis->field, *qr) : ext_sqrt(qv);
      if (!root)
        throw Error("pin lift: norm " + qv.str() + " has no square root in the scenario field");
      CliffordElement unit = embed_vector(basis, v) * root->inverse();
      c = cl_mul(c, unit);
      cinv = cl_mul(unit, cinv);
    }
    lift.c[g] = c;
    lift.c_inv[g] = cinv;
    // twisted conjugation: (-1)^{|g|} rho(g) v = c_g v c_g^{-1}
    for (int j = 0; j < rep.dim; ++j) {
      Vector ej(rep.dim);
      ej[j] = ExtScalar(1);
      Vector lhs = rep.rho[g].apply(ej);
      if (grade) lhs = ExtScalar(-1) * lhs;
      CliffordElement conj = cl_mul(cl_mul(c, embed_vector(basis, ej)), cinv);
      auto vp = vector_part(conj);
      if (!vp || !(*vp == lhs)) throw Error("internal: pin lift conjugation check failed");
    }
  }
  lift.mu.assign(ng, std::vector<int>(ng, 0));
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h) {
      CliffordElement prod = cl_mul(lift.c[g], lift.c[h]);
      const CliffordElement& target = lift.c[rep.group.mul(g, h)];
      if (prod == target) {
        lift.mu[g][h] = 1;
      } else if (prod == -target) {
        lift.mu[g][h] = -1;
      } else {
        CliffordElement ratio = cl_mul(prod, lift.c_inv[rep.group.mul(g, h)]);
        throw Error("pin lift: scalar discrepancy " + ratio.str() +
                    " outside {+1,-1} (odd-dimensional central pseudoscalar)");
      }
    }
  return lift;
}

Matrix phi_biv(const CliffordElement& b) {
  for (const auto& [m, c] : b.coeffs())
    if (popcount(m) != 2) throw Error("phi_biv expects a bivector");
  const auto& basis = b.basis();
  int n = basis->dim();
  Matrix x(n, n);
  for (int j = 0; j < n; ++j) {
    Vector ej(n);
    ej[j] = ExtScalar(1);
    CliffordElement v = embed_vector(basis, ej);
    CliffordElement comm = cl_mul(b, v) - cl_mul(v, b);
    auto vp = vector_part(comm);
    if (!vp) throw Error("internal: bivector commutator left V");
    for (int i = 0; i < n; ++i) x(i, j) = (*vp)[i];
  }
  if (!(x.transpose() * basis->gram + basis->gram * x).is_zero())
    throw Error("internal: phi_biv image not skew-adjoint");
  return x;
}

CliffordElement gamma_L(const OrthoBasisPtr& basis, const Matrix& x) {
  int n = basis->dim();
  if (x.rows() != n || x.cols() != n) throw Error("gamma_L shape mismatch");
  if (!(x.transpose() * basis->gram + basis->gram * x).is_zero())
    throw Error("gamma_L expects a skew-adjoint matrix");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Matrix sys(n * n, int(pairs.size()));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    CliffordElement biv(basis);
    biv.set_coeff((std::uint64_t(1) << pairs[p].first) | (std::uint64_t(1) << pairs[p].second),
                  ExtScalar(1));
    Matrix m = phi_biv(biv);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sys(i * n + j, int(p)) = m(i, j);
  }
  Vector rhs(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rhs[i * n + j] = x(i, j);
  auto sol = solve(sys, rhs);
  if (!sol) throw Error("internal: gamma_L system inconsistent");
  CliffordElement b(basis);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    b.set_coeff((std::uint64_t(1) << pairs[p].first) | (std::uint64_t(1) << pairs[p].second),
                (*sol)[p]);
  if (!(phi_biv(b) == x)) throw Error("internal: gamma_L verification failed");
  return b;
}

}  // namespace hha
