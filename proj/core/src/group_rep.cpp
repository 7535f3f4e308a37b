#include "hha/group_rep.hpp"

namespace hha {

void OrthogonalRep::validate_structure() const {
  int n = group.order();
  if (int(rho.size()) != n) throw Error("representation needs one matrix per group element");
  for (const auto& m : rho)
    if (m.rows() != dim || m.cols() != dim) throw Error("representation matrix shape mismatch");
  if (gram.rows() != dim || gram.cols() != dim) throw Error("gram matrix shape mismatch");
  if (!(gram.transpose() == gram)) throw Error("gram matrix not symmetric");
  if (det(gram).is_zero()) throw Error("gram matrix degenerate");
  if (!(rho[group.identity()] == Matrix::identity(dim)))
    throw Error("rho(identity) is not the identity matrix");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(rho[a] * rho[b] == rho[group.mul(a, b)]))
        throw Error("rho is not a homomorphism at (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
}

CheckReport OrthogonalRep::validate_orthogonality() const {
  if (det(gram).is_zero()) throw Error("gram matrix degenerate");
  for (int g = 0; g < group.order(); ++g) {
    if (!(rho[g].transpose() * gram * rho[g] == gram))
      return CheckReport::fail("rho(" + std::to_string(g) + ") does not preserve the form");
  }
  return CheckReport::pass();
}

int OrthogonalRep::z2_grade(int g) const {
  ExtScalar d = det(rho[g]);
  if (d == ExtScalar(1)) return 0;
  if (d == ExtScalar(-1)) return 1;
  throw Error("det rho(" + std::to_string(g) + ") is not +-1");
}

GroupAlgebraElement ga_delta(const FiniteGroup& g, int elem) {
  GroupAlgebraElement a(g.order());
  a[elem] = ExtScalar(1);
  return a;
}

GroupAlgebraElement ga_mul(const FiniteGroup& g, const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b) {
  if (int(a.size()) != g.order() || int(b.size()) != g.order())
    throw Error("group algebra element length mismatch");
  GroupAlgebraElement c(g.order());
  for (int i = 0; i < g.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < g.order(); ++j) {
      if (b[j].is_zero()) continue;
      c[g.mul(i, j)] += a[i] * b[j];
    }
  }
  return c;
}

GroupAlgebraElement ga_adjoint(const FiniteGroup& g, int elem, const GroupAlgebraElement& a) {
  if (int(a.size()) != g.order()) throw Error("group algebra element length mismatch");
  GroupAlgebraElement c(g.order());
  for (int i = 0; i < g.order(); ++i) {
    if (a[i].is_zero()) continue;
    c[g.mul(g.mul(elem, i), g.inv(elem))] += a[i];
  }
  return c;
}

std::vector<GroupAlgebraElement> center_of_group_algebra(const FiniteGroup& g) {
  std::vector<GroupAlgebraElement> sums;
  for (const auto& cls : g.conjugacy_classes()) {
    GroupAlgebraElement s(g.order());
    for (int e : cls) s[e] = ExtScalar(1);
    sums.push_back(std::move(s));
  }
  return sums;
}

}  // namespace hha
