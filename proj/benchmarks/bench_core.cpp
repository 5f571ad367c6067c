#include <benchmark/benchmark.h>

#include "nlk3/divisors.hpp"
#include "nlk3/lattice.hpp"
#include "nlk3/nonbn.hpp"
#include "nlk3/picard.hpp"
#include "nlk3/report.hpp"

using nlk3::Int;
using nlk3::NLPair;

static void BM_picard_rank(benchmark::State& state) {
  Int g = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(nlk3::picard_rank(g).rho);
}
BENCHMARK(BM_picard_rank)->Arg(12)->Arg(100)->Arg(1000);

static void BM_jacobi_word(benchmark::State& state) {
  long long a = 123456789, b = 987654321;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlk3::jacobi_symbol(a, b));
    a += 2;
  }
}
BENCHMARK(BM_jacobi_word);

static void BM_jacobi_big(benchmark::State& state) {
  const Int p = (Int(1) << 89) - 1;
  Int a = Int("123456789123456789123456789");
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlk3::jacobi_symbol(a, p));
    a += 2;
  }
}
BENCHMARK(BM_jacobi_big);

static void BM_canonicalize(benchmark::State& state) {
  NLPair pair(101, 517, 24);
  for (auto _ : state)
    benchmark::DoNotOptimize(nlk3::canonicalize(pair).delta());
}
BENCHMARK(BM_canonicalize);

static void BM_decompose(benchmark::State& state) {
  Int g = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(nlk3::decompose(g, 2, 0).members.size());
}
BENCHMARK(BM_decompose)->Arg(7)->Arg(12)->Arg(101);

static void BM_nonbn(benchmark::State& state) {
  Int g = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(nlk3::nonbn_closed_form(g).pairs.size());
}
BENCHMARK(BM_nonbn)->Arg(12)->Arg(100);

static void BM_report(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(nlk3::build_report().all_pass);
}
BENCHMARK(BM_report);

BENCHMARK_MAIN();
