#include <benchmark/benchmark.h>

#include <random>

#include "ttg/isotropy.hpp"

using namespace ttg;

namespace {

ExprPtr deep_expr(std::mt19937& rng, const GroupId& g, int depth) {
  std::uniform_int_distribution<int> node(0, 3), cut(1, 6);
  auto ks = classes(g, 10);
  std::uniform_int_distribution<std::size_t> pick(0, ks.size() - 1);
  if (depth == 0) {
    switch (node(rng)) {
      case 0: return expr::sphere0();
      case 1: return expr::cell(ks[pick(rng)]);
      default: return expr::basic(ks[pick(rng)], cut(rng));
    }
  }
  switch (node(rng)) {
    case 0: return expr::wedge(deep_expr(rng, g, depth - 1), deep_expr(rng, g, depth - 1));
    case 1: return expr::smash(deep_expr(rng, g, depth - 1), deep_expr(rng, g, depth - 1));
    default: return expr::susp(1, deep_expr(rng, g, depth - 1));
  }
}

}  // namespace

static void BM_SupportDeepExpression(benchmark::State& state) {
  std::mt19937 rng(1);
  GroupId so3 = so3_group();
  ExprPtr e = deep_expr(rng, so3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(support(so3, e).set.is_empty());
}
BENCHMARK(BM_SupportDeepExpression)->DenseRange(4, 10, 2);

static void BM_RealizeRoundTrip(benchmark::State& state) {
  GroupId o2 = o2_group();
  ClassSet s = ClassSet::of(o2, {class_full(), class_SO2(), class_D(2), class_D(5)});
  s.d.cofinite = true;
  s.d.idx = {1, 3, 4, 6};
  s = lambda_ct(s);
  for (auto _ : state) {
    ExprPtr e = realize(o2, s);
    benchmark::DoNotOptimize(support(o2, e).set == s);
  }
}
BENCHMARK(BM_RealizeRoundTrip);

static void BM_ZariskiClosure(benchmark::State& state) {
  GroupId o2 = o2_group();
  ClassSet s = ClassSet::empty(o2);
  s.c.cofinite = true;
  s.d = {true, {1, 2, 5}};
  for (auto _ : state) benchmark::DoNotOptimize(zariski_closure(s).is_empty());
}
BENCHMARK(BM_ZariskiClosure);
