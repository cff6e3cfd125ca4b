#include <benchmark/benchmark.h>

#include "reestype/rees.hpp"

using namespace reestype;

namespace {

QuotientRing counterexample_ring() {
  PolyRing amb(kDefaultPrime, {"x", "y", "z", "w"});
  return QuotientRing(amb, amb.parse_list("w^2, w*z", amb.grevlex()));
}

std::vector<Polynomial> instance_gens(const QuotientRing& R, unsigned n) {
  const PolyRing& amb = R.ambient();
  MonomialOrder ord = amb.grevlex();
  return {amb.parse("x^" + std::to_string(n - 1) + "*y + z^" + std::to_string(n), ord),
          amb.parse("x^" + std::to_string(n), ord),
          amb.parse("y^" + std::to_string(n), ord)};
}

}  // namespace

static void BM_RelationTypeExample21(benchmark::State& state) {
  QuotientRing R = counterexample_ring();
  auto gens = instance_gens(R, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    ReesPresentation P = rees_presentation(R, gens);
    benchmark::DoNotOptimize(relation_type(P));
  }
}
BENCHMARK(BM_RelationTypeExample21)->Arg(2)->Arg(3)->Arg(4);

static void BM_TwoParamDescent(benchmark::State& state) {
  PolyRing amb(kDefaultPrime, {"a", "b", "c", "d"});
  QuotientRing R(amb, amb.parse_list("a*b, a*d, c*b, c*d", amb.grevlex()));
  ReesContext ctx(R, amb.parse_list("a+b, c+d", amb.grevlex()));
  Polynomial F = ctx.relation_ring().parse("-1*c*T1^3 + a*T1^2*T2",
                                           ctx.relation_order());
  Polynomial gamma = amb.parse("a+b+c+d", amb.grevlex());
  for (auto _ : state) {
    DescentResult res = two_param_descent(ctx, F, gamma);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_TwoParamDescent);

BENCHMARK_MAIN();
