#include <benchmark/benchmark.h>

#include <random>

#include "ttg/semifree.hpp"

using namespace ttg;
using namespace ttg::semifree;

static void BM_AttachChain(benchmark::State& state) {
  for (auto _ : state) {
    WideSphere w = sphere(0);
    for (int i = 0; i < state.range(0); ++i) {
      HomotopyClasses h = homotopy_classes(w, 2 * i + 1);
      RatVec cls(static_cast<std::size_t>(h.total_dim()), Rat(0));
      if (h.ext_dim > 0) cls[static_cast<std::size_t>(h.v_dim)] = 1;
      w = attach_cell(w, 2 * i + 1, cls);
    }
    benchmark::DoNotOptimize(is_untwisted(w));
  }
}
BENCHMARK(BM_AttachChain)->DenseRange(1, 7, 2);

static void BM_EnumerateClasses(benchmark::State& state) {
  LaurentPoly p = parse_laurent("1+2t^2");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classes(p).size());
}
BENCHMARK(BM_EnumerateClasses);

static void BM_IsIsomorphic(benchmark::State& state) {
  WideSphere mf = attach_cell(sphere(0), 1, {Rat(1)});
  WideSphere m2f = attach_cell(sphere(0), 1, {Rat(2)});
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(mf, m2f));
}
BENCHMARK(BM_IsIsomorphic);

static void BM_RrefRandom(benchmark::State& state) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = entry(rng);
  for (auto _ : state) {
    Matrix c = m;
    benchmark::DoNotOptimize(rref(c).size());
  }
}
BENCHMARK(BM_RrefRandom)->DenseRange(4, 16, 4);
