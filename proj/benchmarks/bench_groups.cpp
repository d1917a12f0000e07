#include <benchmark/benchmark.h>

#include "ttg/burnside.hpp"

using namespace ttg;

static void BM_SubgroupEnumerationS4(benchmark::State& state) {
  auto table = tables::symmetric(4);
  for (auto _ : state) {
    GroupId g = load_finite_group(table, "S4");
    benchmark::DoNotOptimize(g.finite->classes.size());
  }
}
BENCHMARK(BM_SubgroupEnumerationS4);

static void BM_SubgroupEnumerationD24(benchmark::State& state) {
  auto table = tables::dihedral(24);  // order 48, the loading cap
  for (auto _ : state) {
    GroupId g = load_finite_group(table, "D48");
    benchmark::DoNotOptimize(g.finite->classes.size());
  }
}
BENCHMARK(BM_SubgroupEnumerationD24);

static void BM_MarksMatrixS4(benchmark::State& state) {
  GroupId g = load_finite_group(tables::symmetric(4), "S4");
  for (auto _ : state) {
    MarksMatrix m = marks_matrix(g);
    benchmark::DoNotOptimize(m.m.rows());
  }
}
BENCHMARK(BM_MarksMatrixS4);

static void BM_PrimitiveIdempotentsS4(benchmark::State& state) {
  GroupId g = load_finite_group(tables::symmetric(4), "S4");
  for (auto _ : state) {
    for (std::size_t l = 0; l < g.finite->classes.size(); ++l)
      benchmark::DoNotOptimize(primitive_idempotent(g, class_finite(static_cast<int>(l))));
  }
}
BENCHMARK(BM_PrimitiveIdempotentsS4);

static void BM_PolyhedralModels(benchmark::State& state) {
  GroupId so3 = so3_group();
  for (auto _ : state) {
    benchmark::DoNotOptimize(model_of_class(so3, class_icosa()).table_fusion.size());
  }
}
BENCHMARK(BM_PolyhedralModels);

BENCHMARK_MAIN();
