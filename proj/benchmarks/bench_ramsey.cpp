#include <benchmark/benchmark.h>

#include "reestype/ramsey.hpp"

using namespace reestype;

static void BM_RamseySearch(benchmark::State& state) {
  auto l = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto r = ramsey_number_search(2, 0, l, l == 2 ? 6 : 8);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RamseySearch)->Arg(2)->Arg(3);

static void BM_LongestChain(benchmark::State& state) {
  std::size_t len = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<std::uint32_t>> tuples;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t sum = static_cast<std::uint32_t>(i) + 1;
    std::vector<std::uint32_t> t(3, 0);
    for (std::uint32_t u = 0; u < sum; ++u) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      t[(seed >> 33) % 3] += 1;
    }
    tuples.push_back(t);
  }
  TupleSequence s = TupleSequence::checked(3, 0, tuples);
  for (auto _ : state) {
    auto chain = longest_chain(s);
    benchmark::DoNotOptimize(chain);
  }
}
BENCHMARK(BM_LongestChain)->Arg(32)->Arg(128);

BENCHMARK_MAIN();
