#include <doctest.h>

#include "hha/gf2.hpp"
#include "hha/matrix.hpp"
#include "hha/subspace.hpp"
#include "test_helpers.hpp"

using namespace hha;
using hha::testing::rational_matrix;

TEST_CASE("rref basics") {
  auto r1 = rref(Matrix::identity(3));
  CHECK(r1.rank == 3);
  CHECK(r1.pivots == std::vector<int>{0, 1, 2});
  CHECK(r1.m == Matrix::identity(3));

  auto r2 = rref(Matrix(2, 2));
  CHECK(r2.rank == 0);
  CHECK(r2.pivots.empty());

  auto r3 = rref(rational_matrix({{1, 2}, {2, 4}}));
  CHECK(r3.rank == 1);
  CHECK(r3.m == rational_matrix({{1, 2}, {0, 0}}));
}

TEST_CASE("kernel basics and rank-nullity") {
  CHECK(kernel_matrix(Matrix::identity(3)).rows() == 0);
  CHECK(kernel_matrix(Matrix(2, 3)).rows() == 3);

  Matrix m = rational_matrix({{1, 1, 0}});
  Matrix k = kernel_matrix(m);
  CHECK(k.rows() == 2);
  for (int i = 0; i < k.rows(); ++i) CHECK(is_zero(m.apply(k.row(i))));

  std::mt19937_64 rng(11);
  auto f = QuadraticField::make({Integer(2)});
  for (int t = 0; t < 10; ++t) {
    Matrix a(3, 5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = testing::random_scalar(rng, f);
    Matrix k2 = kernel_matrix(a);
    CHECK(rref(a).rank + k2.rows() == 5);
    for (int i = 0; i < k2.rows(); ++i) CHECK(is_zero(a.apply(k2.row(i))));
  }
}

TEST_CASE("solve with free variables zero") {
  auto id = Matrix::identity(2);
  Vector e1{ExtScalar(1), ExtScalar(0)};
  CHECK(*solve(id, e1) == e1);

  Matrix wide = rational_matrix({{1, 1}});
  auto x = solve(wide, {ExtScalar(1)});
  REQUIRE(x.has_value());
  CHECK(*x == Vector{ExtScalar(1), ExtScalar(0)});

  Matrix tall = rational_matrix({{1}, {1}});
  CHECK(!solve(tall, {ExtScalar(1), ExtScalar(2)}).has_value());

  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    Matrix a(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = ExtScalar(testing::random_rational(rng));
    Vector x0 = testing::random_vector(rng, nullptr, 4);
    auto got = solve(a, a.apply(x0));
    REQUIRE(got.has_value());
    CHECK(a.apply(*got) == a.apply(x0));
  }
}

TEST_CASE("determinant and inverse") {
  CHECK(det(rational_matrix({{2, 0}, {0, 3}})) == ExtScalar(6));
  CHECK(det(rational_matrix({{1, 2}, {2, 4}})).is_zero());
  auto inv = inverse(rational_matrix({{2, 1}, {1, 1}}));
  REQUIRE(inv.has_value());
  CHECK(*inv * rational_matrix({{2, 1}, {1, 1}}) == Matrix::identity(2));
  CHECK(!inverse(rational_matrix({{1, 1}, {1, 1}})).has_value());
}

TEST_CASE("subspace operations") {
  auto e1 = SubspaceBasis::from_vectors(2, {{ExtScalar(1), ExtScalar(0)}});
  auto e2 = SubspaceBasis::from_vectors(2, {{ExtScalar(0), ExtScalar(1)}});
  CHECK(subspace_sum(e1, e2) == SubspaceBasis::full(2));
  CHECK(subspace_intersection(e1, e2).dim() == 0);
  CHECK(quotient_dim(SubspaceBasis::full(2), e1) == 1);
  CHECK(e1.contains(Vector{ExtScalar(5), ExtScalar(0)}));
  CHECK(!e1.contains(Vector{ExtScalar(0), ExtScalar(1)}));

  // dim(a+b) = dim a + dim b - dim(a cap b), on random spans
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    std::vector<Vector> va, vb;
    for (int i = 0; i < 2; ++i) va.push_back(testing::random_vector(rng, nullptr, 4));
    for (int i = 0; i < 3; ++i) vb.push_back(testing::random_vector(rng, nullptr, 4));
    auto a = SubspaceBasis::from_vectors(4, va);
    auto b = SubspaceBasis::from_vectors(4, vb);
    CHECK(subspace_sum(a, b).dim() == a.dim() + b.dim() - subspace_intersection(a, b).dim());
  }
}

TEST_CASE("gf2 solving") {
  Gf2System empty;
  auto r = gf2_solve(empty);
  REQUIRE(r.has_value());
  CHECK(r->empty());

  Gf2System sys;
  sys.nvars = 2;
  sys.add_equation({1, 1}, 1);
  sys.add_equation({1, 0}, 1);
  auto sol = gf2_solve(sys);
  REQUIRE(sol.has_value());
  CHECK(*sol == std::vector<std::uint8_t>{1, 0});

  Gf2System bad;
  bad.nvars = 1;
  bad.add_equation({1}, 0);
  bad.add_equation({1}, 1);
  CHECK(!gf2_solve(bad).has_value());
}
