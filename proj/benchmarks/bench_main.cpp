// Microbenchmarks for the exact linear algebra kernel and the category
// operations everything reduces to.

#include <benchmark/benchmark.h>

#include <random>

#include "qhom/gorenstein.hpp"

using namespace qhom;

namespace {

Matrix random_matrix(Field f, int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix a(f, n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) a.set(i, j, static_cast<std::int64_t>(rng() % f.p()));
  return a;
}

std::shared_ptr<const AlgebraCat> l3() {
  Quiver q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"alpha", 2, 1}, {"beta", 1, 0}};
  return AlgebraCat::make(std::make_shared<MonomialAlgebra>(
      "L3", q, Field::fp(2), std::vector<std::vector<std::string>>{{"alpha", "beta"}}));
}

std::shared_ptr<const AlgebraCat> n2() {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  return AlgebraCat::make(std::make_shared<MonomialAlgebra>(
      "N2", q, Field::fp(2), std::vector<std::vector<std::string>>{{"x", "x"}}));
}

}  // namespace

static void BM_rref(benchmark::State& state) {
  Field f = Field::fp(static_cast<std::uint32_t>(state.range(1)));
  int n = static_cast<int>(state.range(0));
  Matrix a = random_matrix(f, n, n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(a.rref().rank);
}
BENCHMARK(BM_rref)->Args({8, 2})->Args({32, 2})->Args({64, 2})->Args({32, 65521});

static void BM_kernel_basis(benchmark::State& state) {
  Field f = Field::fp(2);
  int n = static_cast<int>(state.range(0));
  Matrix a = random_matrix(f, n / 2, n, 43);
  for (auto _ : state) benchmark::DoNotOptimize(a.kernel_basis().cols());
}
BENCHMARK(BM_kernel_basis)->Arg(16)->Arg(64);

static void BM_solve(benchmark::State& state) {
  Field f = Field::fp(2);
  int n = static_cast<int>(state.range(0));
  Matrix a = random_matrix(f, n, n, 44);
  Matrix b = random_matrix(f, n, 1, 45);
  for (auto _ : state) benchmark::DoNotOptimize(a.solve(b).has_value());
}
BENCHMARK(BM_solve)->Arg(16)->Arg(64);

static void BM_hom_space(benchmark::State& state) {
  auto cat = std::static_pointer_cast<const Cat>(l3());
  Rep p2 = projective_rep(cat, 1), p3 = projective_rep(cat, 2);
  auto big = direct_sum({p2, p3, p2, p3});
  for (auto _ : state) benchmark::DoNotOptimize(hom_space(big.rep, big.rep).size());
}
BENCHMARK(BM_hom_space);

static void BM_ext_table(benchmark::State& state) {
  auto cat = std::static_pointer_cast<const Cat>(l3());
  auto indecs = enumerate_indecomposables(cat, 3);
  for (auto _ : state) {
    int total = 0;
    for (const auto& a : indecs)
      for (const auto& b : indecs) total += ext_dim(a, b, 1);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ext_table);

static void BM_enumerate_comma(benchmark::State& state) {
  auto cc = CommaCat::make(Bimodule::regular(n2()), "T2N2");
  int cap = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        enumerate_indecomposables(std::static_pointer_cast<const Cat>(cc), cap).size());
}
BENCHMARK(BM_enumerate_comma)->Arg(2)->Arg(3);

static void BM_gp_detect(benchmark::State& state) {
  auto cat = std::static_pointer_cast<const Cat>(n2());
  Rep s = simple_rep(cat, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(is_gorenstein_projective(s, 8).status == GpStatus::Certified);
}
BENCHMARK(BM_gp_detect);

static void BM_special_precover(benchmark::State& state) {
  auto cat = std::static_pointer_cast<const Cat>(l3());
  std::vector<Rep> raw = {projective_rep(cat, 0), projective_rep(cat, 1),
                          projective_rep(cat, 2), simple_rep(cat, 2)};
  ObjectClass cls = canonical_class("pXY", cat, raw);
  Rep s2 = simple_rep(cat, 1);
  for (auto _ : state) benchmark::DoNotOptimize(special_precover(s2, cls).certs.all());
}
BENCHMARK(BM_special_precover);

BENCHMARK_MAIN();
