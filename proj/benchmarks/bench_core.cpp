#include <benchmark/benchmark.h>

#include <random>

#include "hha/dirac.hpp"

using namespace hha;

namespace {

DiracContext cherednik_context() {
  OrthogonalRep rep;
  rep.group = FiniteGroup::build({{0, 1}, {1, 0}});
  rep.dim = 2;
  Matrix id = Matrix::identity(2);
  Matrix minus(2, 2);
  minus(0, 0) = ExtScalar(-1);
  minus(1, 1) = ExtScalar(-1);
  rep.rho = {id, minus};
  rep.gram = id;
  Kappa k = Kappa::zero(2, 2);
  k.vals[0][1] = ExtScalar(2);
  auto alg = std::make_shared<HeckeAlgebra>(std::make_shared<OrthogonalRep>(rep), std::move(k));
  return make_dirac_context(alg, orthogonalize(nullptr, rep.gram));
}

Matrix random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      m(i, j) = ExtScalar(q);
    }
  return m;
}

void BM_ext_scalar_mul(benchmark::State& state) {
  auto f = QuadraticField::make({Integer(2), Integer(3)});
  ExtScalar a = ExtScalar(Rational(3, 7)) + ExtScalar(f, 1, Rational(1, 2)) +
                ExtScalar(f, 3, Rational(-5, 3));
  ExtScalar b = ExtScalar(Rational(-2, 5)) + ExtScalar(f, 2, Rational(9, 4));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ext_scalar_mul);

void BM_rref(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Matrix m = random_matrix(int(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(10)->Arg(20)->Arg(40);

void BM_cl_mul(benchmark::State& state) {
  auto basis = orthogonalize(nullptr, Matrix::identity(int(state.range(0))));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint64_t> mask(0, (1u << state.range(0)) - 1);
  std::uniform_int_distribution<int> num(-9, 9);
  CliffordElement a(basis), b(basis);
  for (int k = 0; k < 8; ++k) {
    a.set_coeff(mask(rng), ExtScalar(num(rng)));
    b.set_coeff(mask(rng), ExtScalar(num(rng)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(cl_mul(a, b));
}
BENCHMARK(BM_cl_mul)->Arg(4)->Arg(6);

void BM_normal_form(benchmark::State& state) {
  DiracContext ctx = cherednik_context();
  Vector e1{ExtScalar(1), ExtScalar(0)}, e2{ExtScalar(0), ExtScalar(1)};
  Word w;
  for (int i = 0; i < state.range(0); ++i) {
    w.push_back(Letter::vec(i % 2 ? e1 : e2));
    if (i % 3 == 0) w.push_back(Letter::group(1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(ctx.alg->normal_form(w));
}
BENCHMARK(BM_normal_form)->Arg(6)->Arg(10);

void BM_dirac_square(benchmark::State& state) {
  DiracContext ctx = cherednik_context();
  for (auto _ : state) benchmark::DoNotOptimize(dirac_square(ctx));
}
BENCHMARK(BM_dirac_square);

void BM_graded_homology(benchmark::State& state) {
  DiracContext ctx = cherednik_context();
  for (auto _ : state) benchmark::DoNotOptimize(graded_homology_check(ctx, int(state.range(0))));
}
BENCHMARK(BM_graded_homology)->Arg(2)->Arg(3);

void BM_zeta_casimir(benchmark::State& state) {
  DiracContext ctx = cherednik_context();
  AlgebraElement omega = ctx.alg->casimir();
  for (auto _ : state) benchmark::DoNotOptimize(zeta(ctx, omega, 2));
}
BENCHMARK(BM_zeta_casimir);

}  // namespace

BENCHMARK_MAIN();
