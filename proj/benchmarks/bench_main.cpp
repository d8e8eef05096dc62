#include <benchmark/benchmark.h>

#include <random>

#include "modrep/construct.hpp"
#include "modrep/numtheory.hpp"
#include "modrep/qsim.hpp"
#include "modrep/search.hpp"
#include "modrep/transforms.hpp"

using namespace modrep;

static void BM_BinomLucasCrt(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    for (std::uint64_t k = 0; k <= n; k += n / 64 + 1) benchmark::DoNotOptimize(binom_mod_squarefree(n, k, 30));
}
BENCHMARK(BM_BinomLucasCrt)->Arg(300)->Arg(10'000)->Arg(100'000);

static void BM_BinomPascal(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    for (std::uint64_t k = 0; k <= n; k += n / 64 + 1) benchmark::DoNotOptimize(binom_mod_pascal(n, k, 30));
}
BENCHMARK(BM_BinomPascal)->Arg(300)->Arg(2000);

static void BM_SearchDegreeOne(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto m = static_cast<std::uint64_t>(state.range(1));
  SearchOptions opt;
  opt.d_max = 1;
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_min_degree(PromiseFn(n), m, opt));
}
BENCHMARK(BM_SearchDegreeOne)->Args({8, 2})->Args({12, 3})->Unit(benchmark::kMillisecond);

static void BM_GroverOneQuery(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const auto set = OracleSet::random(n, n / 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(one_query_decide(set, rng));
}
BENCHMARK(BM_GroverOneQuery)->Arg(64)->Arg(1024);

static void BM_ConstructSweep(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    for (std::uint64_t n = 4; n <= 100'000; n += 4) benchmark::DoNotOptimize(build(n, m));
}
BENCHMARK(BM_ConstructSweep)->Arg(6)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_PrimePowerReduce(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto g = random_multilinear(6, 9, 2, 0.5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(prime_power_reduce(g, 3, 2));
}
BENCHMARK(BM_PrimePowerReduce);
BENCHMARK_MAIN();
