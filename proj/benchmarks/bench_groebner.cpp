#include <benchmark/benchmark.h>

#include "reestype/groebner.hpp"

using namespace reestype;

static void BM_BuchbergerTwistedCubicCone(benchmark::State& state) {
  PolyRing R(kDefaultPrime, {"x", "y", "t", "T1", "T2", "T3"});
  MonomialOrder ord = MonomialOrder::block_elimination(R.nvars(), 3);
  auto gens = R.parse_list("T1 - t*x^2, T2 - t*x*y, T3 - t*y^2", ord);
  for (auto _ : state) {
    auto gb = buchberger(gens, R.field(), ord);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_BuchbergerTwistedCubicCone);

static void BM_BuchbergerKatsura3(benchmark::State& state) {
  PolyRing R(kDefaultPrime, {"x", "y", "z"});
  MonomialOrder ord = R.grevlex();
  auto gens = R.parse_list(
      "x + 2*y + 2*z - 1, x^2 + 2*y^2 + 2*z^2 - x, 2*x*y + 2*y*z - y", ord);
  for (auto _ : state) {
    auto gb = buchberger(gens, R.field(), ord);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_BuchbergerKatsura3);

static void BM_IdealIntersection(benchmark::State& state) {
  PolyRing R(kDefaultPrime, {"a", "b", "c", "d"});
  MonomialOrder ord = R.grevlex();
  Ideal I(R, ord, R.parse_list("a, c", ord));
  Ideal J(R, ord, R.parse_list("b, d", ord));
  for (auto _ : state) {
    Ideal K = I.intersect(J);
    benchmark::DoNotOptimize(K.generators());
  }
}
BENCHMARK(BM_IdealIntersection);

BENCHMARK_MAIN();
