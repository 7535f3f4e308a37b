#include "hha/hopf_hecke.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hha {

Kappa Kappa::zero(int dim, int group_order) {
  Kappa k;
  k.dim = dim;
  k.group_order = group_order;
  k.vals.assign(std::size_t(dim) * (dim - 1) / 2, GroupAlgebraElement(group_order));
  return k;
}

int Kappa::pair_index(int i, int j) const {
  if (!(0 <= i && i < j && j < dim)) throw Error("kappa pair index out of range");
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

GroupAlgebraElement Kappa::value(int i, int j) const {
  if (i == j) return GroupAlgebraElement(group_order);
  if (i < j) return vals[pair_index(i, j)];
  GroupAlgebraElement v = vals[pair_index(j, i)];
  for (auto& c : v) c = -c;
  return v;
}

bool Kappa::is_zero() const {
  for (const auto& v : vals)
    if (!hha::is_zero(v)) return false;
  return true;
}

CheckReport validate_kappa(const OrthogonalRep& rep, const Kappa& kappa) {
  if (kappa.dim != rep.dim || kappa.group_order != rep.group.order())
    return CheckReport::fail("kappa shape mismatch");
  const FiniteGroup& grp = rep.group;
  for (int g = 0; g < grp.order(); ++g) {
    for (int i = 0; i < rep.dim; ++i) {
      for (int j = i + 1; j < rep.dim; ++j) {
        GroupAlgebraElement lhs = ga_adjoint(grp, g, kappa.value(i, j));
        // kappa(rho(g)e_i wedge rho(g)e_j), expanded bilinearly
        GroupAlgebraElement rhs(grp.order());
        for (int k = 0; k < rep.dim; ++k) {
          for (int l = 0; l < rep.dim; ++l) {
            if (k == l) continue;
            ExtScalar c = rep.rho[g](k, i) * rep.rho[g](l, j);
            if (c.is_zero()) continue;
            GroupAlgebraElement kv = kappa.value(k, l);
            for (int m = 0; m < grp.order(); ++m)
              if (!kv[m].is_zero()) rhs[m] += c * kv[m];
          }
        }
        if (!(lhs == rhs))
          return CheckReport::fail("equivariance fails at (g=" + std::to_string(g) +
                                   ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
      }
    }
  }
  return CheckReport::pass();
}

int PBWKey::degree() const {
  int d = 0;
  for (auto e : exp) d += int(e);
  return d;
}

bool PBWKey::operator<(const PBWKey& o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  if (exp != o.exp) return exp < o.exp;
  return g < o.g;
}

void AlgebraElement::add_term(const PBWKey& k, const ExtScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_[k] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExtScalar AlgebraElement::coeff(const PBWKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? ExtScalar() : it->second;
}

int AlgebraElement::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
  return d;
}

AlgebraElement AlgebraElement::graded_component(int d) const {
  AlgebraElement r;
  for (const auto& [k, c] : terms_)
    if (k.degree() == d) r.terms_[k] = c;
  return r;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator*(const ExtScalar& s) const {
  AlgebraElement r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (std::size_t i = 0; i < k.exp.size(); ++i)
      for (std::uint32_t e = 0; e < k.exp[i]; ++e) os << "*x" << (i + 1);
    os << "*d" << k.g;
  }
  return os.str();
}

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const OrthogonalRep> rep, Kappa kappa)
    : rep_(std::move(rep)), kappa_(std::move(kappa)) {
  if (kappa_.dim != rep_->dim || kappa_.group_order != rep_->group.order())
    throw Error("kappa shape mismatch");
}

AlgebraElement HeckeAlgebra::one() const { return delta(rep_->group.identity()); }

AlgebraElement HeckeAlgebra::delta(int g) const {
  AlgebraElement a;
  a.add_term({std::vector<std::uint32_t>(dim(), 0), g}, ExtScalar(1));
  return a;
}

AlgebraElement HeckeAlgebra::generator(int i) const {
  std::vector<std::uint32_t> e(dim(), 0);
  e[i] = 1;
  AlgebraElement a;
  a.add_term({std::move(e), rep_->group.identity()}, ExtScalar(1));
  return a;
}

AlgebraElement HeckeAlgebra::term(const PBWKey& k) const {
  AlgebraElement a;
  a.add_term(k, ExtScalar(1));
  return a;
}

AlgebraElement HeckeAlgebra::from_group_algebra(const GroupAlgebraElement& v) const {
  AlgebraElement a;
  std::vector<std::uint32_t> zero(dim(), 0);
  for (int g = 0; g < group_order(); ++g)
    if (!v[g].is_zero()) a.add_term({zero, g}, v[g]);
  return a;
}

AlgebraElement HeckeAlgebra::rmul_group(const AlgebraElement& a, int g) const {
  AlgebraElement r;
  for (const auto& [k, c] : a.terms()) r.add_term({k.exp, rep_->group.mul(k.g, g)}, c);
  return r;
}

AlgebraElement HeckeAlgebra::mono_rmul_basis(const std::vector<std::uint32_t>& alpha,
                                             int k) const {
  int j = -1;
  for (int i = dim() - 1; i >= 0; --i)
    if (alpha[i] > 0) {
      j = i;
      break;
    }
  if (j <= k) {
    auto beta = alpha;
    beta[k] += 1;
    AlgebraElement r;
    r.add_term({std::move(beta), rep_->group.identity()}, ExtScalar(1));
    return r;
  }
  // x^alpha e_k = (x^alpha' e_k) e_j - x^alpha' kappa(e_k, e_j), alpha = alpha' + eps_j
  auto alpha_p = alpha;
  alpha_p[j] -= 1;
  AlgebraElement r = rmul_basis(mono_rmul_basis(alpha_p, k), j);
  const GroupAlgebraElement kv = kappa_.value(k, j);
  for (int m = 0; m < group_order(); ++m)
    if (!kv[m].is_zero()) r.add_term({alpha_p, m}, -kv[m]);
  return r;
}

AlgebraElement HeckeAlgebra::rmul_basis(const AlgebraElement& a, int i) const {
  AlgebraElement r;
  for (const auto& [k, c] : a.terms()) {
    // (x^alpha delta_g) e_i = x^alpha (rho(g) e_i) delta_g
    for (int l = 0; l < dim(); ++l) {
      ExtScalar w = rep_->rho[k.g](l, i);
      if (w.is_zero()) continue;
      AlgebraElement part = rmul_group(mono_rmul_basis(k.exp, l), k.g);
      r += part * (c * w);
    }
  }
  return r;
}

AlgebraElement HeckeAlgebra::rmul_vector(const AlgebraElement& a, const Vector& v) const {
  if (int(v.size()) != dim()) throw Error("vector length mismatch");
  AlgebraElement r;
  for (int i = 0; i < dim(); ++i)
    if (!v[i].is_zero()) r += rmul_basis(a, i) * v[i];
  return r;
}

AlgebraElement HeckeAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  AlgebraElement r;
  for (const auto& [k, c] : b.terms()) {
    AlgebraElement acc = a * c;
    for (int i = 0; i < dim(); ++i)
      for (std::uint32_t e = 0; e < k.exp[i]; ++e) acc = rmul_basis(acc, i);
    r += rmul_group(acc, k.g);
  }
  return r;
}

AlgebraElement HeckeAlgebra::adjoint(int g, const AlgebraElement& a) const {
  return multiply(multiply(delta(g), a), delta(rep_->group.inv(g)));
}

namespace {

// word letters for the reduction engine: i >= 0 is the basis vector e_i,
// negative encodes the group element -(v+1)
using EWord = std::vector<int>;

int encode_group(int g) { return -(g + 1); }
bool is_group_letter(int v) { return v < 0; }
int decode_group(int v) { return -v - 1; }

struct WordSum {
  std::map<EWord, ExtScalar> terms;
  void add(const EWord& w, const ExtScalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms[w] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
};

bool reducible_at(const HeckeAlgebra& alg, const EWord& w, int p) {
  (void)alg;
  if (p + 1 >= int(w.size())) return false;
  int a = w[p], b = w[p + 1];
  if (is_group_letter(a)) return true;  // group-group merge or group past vector
  if (!is_group_letter(b) && a > b) return true;  // out-of-order vector pair
  return false;
}

}  // namespace

AlgebraElement HeckeAlgebra::normal_form(const Word& w, ReduceStrategy strategy) const {
  // expand vector letters over the scenario basis
  WordSum state;
  state.add({}, ExtScalar(1));
  for (const auto& letter : w) {
    WordSum next;
    for (const auto& [word, c] : state.terms) {
      if (letter.is_group) {
        EWord nw = word;
        nw.push_back(encode_group(letter.g));
        next.add(nw, c);
      } else {
        if (int(letter.v.size()) != dim()) throw Error("vector letter length mismatch");
        for (int i = 0; i < dim(); ++i) {
          if (letter.v[i].is_zero()) continue;
          EWord nw = word;
          nw.push_back(i);
          next.add(nw, c * letter.v[i]);
        }
      }
    }
    state = std::move(next);
  }

  AlgebraElement out;
  const FiniteGroup& grp = rep_->group;
  while (!state.terms.empty()) {
    auto it = state.terms.begin();
    EWord word = it->first;
    ExtScalar coeff = it->second;
    state.terms.erase(it);

    int pos = -1;
    int size = int(word.size());
    if (strategy == ReduceStrategy::Leftmost) {
      for (int p = 0; p + 1 < size; ++p)
        if (reducible_at(*this, word, p)) {
          pos = p;
          break;
        }
    } else {
      for (int p = size - 2; p >= 0; --p)
        if (reducible_at(*this, word, p)) {
          pos = p;
          break;
        }
    }

    if (pos < 0) {
      // normal word: ascending vectors then at most one group letter
      PBWKey key{std::vector<std::uint32_t>(dim(), 0), grp.identity()};
      for (int v : word) {
        if (is_group_letter(v))
          key.g = decode_group(v);
        else
          key.exp[v] += 1;
      }
      out.add_term(key, coeff);
      continue;
    }

    int a = word[pos], b = word[pos + 1];
    if (is_group_letter(a) && is_group_letter(b)) {
      EWord nw = word;
      nw.erase(nw.begin() + pos + 1);
      nw[pos] = encode_group(grp.mul(decode_group(a), decode_group(b)));
      state.add(nw, coeff);
    } else if (is_group_letter(a)) {
      // g e_i -> sum_l rho(g)_{li} e_l g
      int g = decode_group(a);
      for (int l = 0; l < dim(); ++l) {
        ExtScalar c = rep_->rho[g](l, b);
        if (c.is_zero()) continue;
        EWord nw = word;
        nw[pos] = l;
        nw[pos + 1] = a;
        state.add(nw, coeff * c);
      }
    } else {
      // e_a e_b (a > b) -> e_b e_a - kappa(e_b, e_a)
      EWord swapped = word;
      std::swap(swapped[pos], swapped[pos + 1]);
      state.add(swapped, coeff);
      GroupAlgebraElement kv = kappa_.value(b, a);
      for (int m = 0; m < group_order(); ++m) {
        if (kv[m].is_zero()) continue;
        EWord nw;
        nw.reserve(word.size());
        for (int p2 = 0; p2 < size; ++p2) {
          if (p2 == pos) continue;
          if (p2 == pos + 1)
            nw.push_back(encode_group(m));
          else
            nw.push_back(word[p2]);
        }
        state.add(nw, -(coeff * kv[m]));
      }
    }
  }
  return out;
}

AlgebraElement HeckeAlgebra::casimir() const {
  auto binv = inverse(rep_->gram);
  if (!binv) throw Error("gram matrix degenerate");
  AlgebraElement omega;
  for (int k = 0; k < dim(); ++k) {
    // v_k = e_k, v^k = sum_l Binv(l,k) e_l
    for (int l = 0; l < dim(); ++l) {
      ExtScalar c = (*binv)(l, k);
      if (c.is_zero()) continue;
      omega += multiply(generator(k), generator(l)) * c;
    }
  }
  return omega;
}

PbwResult check_pbw(const HeckeAlgebra& alg) {
  PbwResult res;
  auto eq = validate_kappa(alg.rep(), alg.kappa());
  if (!eq.ok) {
    res.pass = false;
    res.failures.push_back({"equivariance", eq.witness});
  }
  int n = alg.dim();
  auto basis_vec = [&](int i) {
    Vector v(n);
    v[i] = ExtScalar(1);
    return v;
  };
  // vector-vector-vector overlaps e_k e_j e_i, i <= j <= k
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        Word w{Letter::vec(basis_vec(k)), Letter::vec(basis_vec(j)), Letter::vec(basis_vec(i))};
        AlgebraElement left = alg.normal_form(w, ReduceStrategy::Leftmost);
        AlgebraElement right = alg.normal_form(w, ReduceStrategy::Rightmost);
        ++res.overlaps_checked;
        if (!(left == right)) {
          res.pass = false;
          std::ostringstream os;
          os << "critical pair (e" << k + 1 << " e" << j + 1 << " e" << i + 1
             << "): difference " << (left - right).str();
          res.failures.push_back({"critical-pair", os.str()});
        }
      }
  // group-vector-vector overlaps g e_j e_i, i <= j
  for (int g = 0; g < alg.group_order(); ++g)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Word w{Letter::group(g), Letter::vec(basis_vec(j)), Letter::vec(basis_vec(i))};
        AlgebraElement left = alg.normal_form(w, ReduceStrategy::Leftmost);
        AlgebraElement right = alg.normal_form(w, ReduceStrategy::Rightmost);
        ++res.overlaps_checked;
        if (!(left == right)) {
          res.pass = false;
          std::ostringstream os;
          os << "critical pair (g" << g << " e" << j + 1 << " e" << i + 1 << "): difference "
             << (left - right).str();
          res.failures.push_back({"critical-pair", os.str()});
        }
      }
  return res;
}

namespace {

using Poly = std::map<std::vector<std::uint32_t>, ExtScalar>;  // symmetric algebra

void poly_add(Poly& p, const std::vector<std::uint32_t>& mono, const ExtScalar& c) {
  if (c.is_zero()) return;
  auto it = p.find(mono);
  if (it == p.end()) {
    p[mono] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// product of linear forms (rho(g) e_i) in S(V): the independent route for the
// leading-term comparison
Poly symmetric_action(const OrthogonalRep& rep, int g, const std::vector<std::uint32_t>& beta) {
  Poly p;
  p[std::vector<std::uint32_t>(rep.dim, 0)] = ExtScalar(1);
  for (int i = 0; i < rep.dim; ++i) {
    for (std::uint32_t e = 0; e < beta[i]; ++e) {
      Poly q;
      for (const auto& [mono, c] : p) {
        for (int l = 0; l < rep.dim; ++l) {
          ExtScalar w = rep.rho[g](l, i);
          if (w.is_zero()) continue;
          auto m2 = mono;
          m2[l] += 1;
          poly_add(q, m2, c * w);
        }
      }
      p = std::move(q);
    }
  }
  return p;
}

}  // namespace

CheckReport pbw_dimension_check(const HeckeAlgebra& alg, int max_degree) {
  auto keys = pbw_keys_up_to(alg, max_degree);
  for (const auto& ka : keys) {
    for (const auto& kb : keys) {
      int d = ka.degree() + kb.degree();
      if (d > max_degree) continue;
      AlgebraElement prod = alg.multiply(alg.term(ka), alg.term(kb));
      AlgebraElement top = prod.graded_component(d);
      // expected leading term: x^alpha (rho(g) x^beta) delta_{gh} in S(V) x| F[G]
      AlgebraElement expected;
      Poly acted = symmetric_action(alg.rep(), ka.g, kb.exp);
      int gh = alg.rep().group.mul(ka.g, kb.g);
      for (const auto& [mono, c] : acted) {
        auto exp = ka.exp;
        for (int i = 0; i < alg.dim(); ++i) exp[i] += mono[i];
        expected.add_term({exp, gh}, c);
      }
      if (!(top == expected)) {
        std::ostringstream os;
        os << "leading term deviates from S(V) x| F[G] at (";
        for (auto e : ka.exp) os << e;
        os << ",g" << ka.g << ")*(";
        for (auto e : kb.exp) os << e;
        os << ",g" << kb.g << ")";
        return CheckReport::fail(os.str());
      }
    }
  }
  return CheckReport::pass();
}

std::vector<PBWKey> pbw_keys_up_to(const HeckeAlgebra& alg, int max_degree) {
  std::vector<std::vector<std::uint32_t>> monos;
  std::vector<std::uint32_t> cur(alg.dim(), 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == alg.dim()) {
      monos.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[idx] = std::uint32_t(e);
      rec(idx + 1, remaining - e);
    }
    cur[idx] = 0;
  };
  rec(0, max_degree);
  std::vector<PBWKey> keys;
  for (const auto& m : monos)
    for (int g = 0; g < alg.group_order(); ++g) keys.push_back({m, g});
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<AlgebraElement> center_basis(const HeckeAlgebra& alg, int max_degree) {
  auto keys = pbw_keys_up_to(alg, max_degree);
  auto ext_keys = pbw_keys_up_to(alg, max_degree + 1);
  std::map<PBWKey, int> ext_index;
  for (std::size_t i = 0; i < ext_keys.size(); ++i) ext_index[ext_keys[i]] = int(i);

  int n_unknowns = int(keys.size());
  int block = int(ext_keys.size());
  int n_gens = alg.dim() + alg.group_order();
  Matrix sys(block * n_gens, n_unknowns);
  for (int col = 0; col < n_unknowns; ++col) {
    AlgebraElement e = alg.term(keys[col]);
    int row0 = 0;
    for (int i = 0; i < alg.dim(); ++i, row0 += block) {
      AlgebraElement comm =
          alg.multiply(e, alg.generator(i)) - alg.multiply(alg.generator(i), e);
      for (const auto& [k, c] : comm.terms()) sys(row0 + ext_index.at(k), col) = c;
    }
    for (int g = 0; g < alg.group_order(); ++g, row0 += block) {
      AlgebraElement comm = alg.multiply(e, alg.delta(g)) - alg.multiply(alg.delta(g), e);
      for (const auto& [k, c] : comm.terms()) sys(row0 + ext_index.at(k), col) = c;
    }
  }
  Matrix kern = kernel_matrix(sys);
  std::vector<AlgebraElement> out;
  for (int r = 0; r < kern.rows(); ++r) {
    AlgebraElement z;
    for (int c = 0; c < n_unknowns; ++c) z.add_term(keys[c], kern(r, c));
    out.push_back(std::move(z));
  }
  return out;
}

CheckReport validate_module(const HeckeAlgebra& alg, const ModuleAction& m) {
  const OrthogonalRep& rep = alg.rep();
  const FiniteGroup& grp = rep.group;
  if (int(m.group_mats.size()) != grp.order() || int(m.vector_mats.size()) != rep.dim)
    return CheckReport::fail("module needs one matrix per group element and basis vector");
  for (const auto& mat : m.group_mats)
    if (mat.rows() != m.dim || mat.cols() != m.dim)
      return CheckReport::fail("module matrix shape mismatch");
  for (const auto& mat : m.vector_mats)
    if (mat.rows() != m.dim || mat.cols() != m.dim)
      return CheckReport::fail("module matrix shape mismatch");
  if (!(m.group_mats[grp.identity()] == Matrix::identity(m.dim)))
    return CheckReport::fail("module: identity does not act as the identity");
  for (int a = 0; a < grp.order(); ++a)
    for (int b = 0; b < grp.order(); ++b)
      if (!(m.group_mats[a] * m.group_mats[b] == m.group_mats[grp.mul(a, b)]))
        return CheckReport::fail("module: group action not a homomorphism at (" +
                                 std::to_string(a) + "," + std::to_string(b) + ")");
  for (int g = 0; g < grp.order(); ++g) {
    for (int i = 0; i < rep.dim; ++i) {
      Matrix lhs = m.group_mats[g] * m.vector_mats[i] * m.group_mats[grp.inv(g)];
      Matrix rhs(m.dim, m.dim);
      for (int l = 0; l < rep.dim; ++l) {
        ExtScalar c = rep.rho[g](l, i);
        if (!c.is_zero()) rhs = rhs + m.vector_mats[l] * c;
      }
      if (!(lhs == rhs))
        return CheckReport::fail("module: smash relation fails at (g=" + std::to_string(g) +
                                 ", e" + std::to_string(i + 1) + ")");
    }
  }
  for (int i = 0; i < rep.dim; ++i) {
    for (int j = i + 1; j < rep.dim; ++j) {
      Matrix lhs = m.vector_mats[i] * m.vector_mats[j] - m.vector_mats[j] * m.vector_mats[i];
      Matrix rhs(m.dim, m.dim);
      GroupAlgebraElement kv = alg.kappa().value(i, j);
      for (int g = 0; g < grp.order(); ++g)
        if (!kv[g].is_zero()) rhs = rhs + m.group_mats[g] * kv[g];
      if (!(lhs == rhs))
        return CheckReport::fail("module: kappa relation fails at (e" + std::to_string(i + 1) +
                                 ", e" + std::to_string(j + 1) + ")");
    }
  }
  return CheckReport::pass();
}

Matrix evaluate(const HeckeAlgebra& alg, const ModuleAction& m, const AlgebraElement& a) {
  Matrix out(m.dim, m.dim);
  for (const auto& [k, c] : a.terms()) {
    Matrix acc = Matrix::identity(m.dim);
    for (int i = 0; i < alg.dim(); ++i)
      for (std::uint32_t e = 0; e < k.exp[i]; ++e) acc = acc * m.vector_mats[i];
    acc = acc * m.group_mats[k.g];
    out = out + acc * c;
  }
  return out;
}

std::optional<ExtScalar> scalar_of(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  ExtScalar c = m(0, 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == (i == j ? c : ExtScalar()))) return std::nullopt;
  return c;
}

std::vector<ExtScalar> central_character(const HeckeAlgebra& alg, const ModuleAction& m,
                                         const std::vector<AlgebraElement>& center) {
  std::vector<ExtScalar> chi;
  for (const auto& z : center) {
    auto s = scalar_of(evaluate(alg, m, z));
    if (!s) throw Error("central element acts non-scalarly on the module");
    chi.push_back(*s);
  }
  return chi;
}

}  // namespace hha
