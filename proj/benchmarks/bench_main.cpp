#include <benchmark/benchmark.h>

#include <complex>

#include "liprime/analysis.hpp"
#include "liprime/polyrec.hpp"
#include "liprime/prime_zeta.hpp"
#include "liprime/primes.hpp"
#include "liprime/special_fn.hpp"

using namespace liprime;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = sieve(10'000'000);
  return t;
}

void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve(limit).prime_count());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit));
}
BENCHMARK(BM_Sieve)->Arg(1'000'000)->Arg(10'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);

void BM_MobiusTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mobius_table(static_cast<std::uint64_t>(state.range(0))).mu.data());
}
BENCHMARK(BM_MobiusTable)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_NthPrimeLookup(benchmark::State& state) {
  const auto& t = table();
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.nth_prime(n));
    n = n % 600'000 + 7919;
  }
}
BENCHMARK(BM_NthPrimeLookup);

void BM_Li(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(li(x));
}
BENCHMARK(BM_Li)->Arg(10)->Arg(1'000'000)->Arg(1'000'000'000);

void BM_LiInverse(benchmark::State& state) {
  const double y = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(li_inverse(y));
}
BENCHMARK(BM_LiInverse)->Arg(25)->Arg(10'000)->Arg(10'000'000);

void BM_TaylorChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nth_prime_approx(n, NthPrimeMethod::TaylorChain));
}
BENCHMARK(BM_TaylorChain)->Arg(100)->Arg(1000);

void BM_Zeta(benchmark::State& state) {
  const std::complex<double> s(1.5, 10.0);
  const auto terms = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_evaluate(s, terms));
}
BENCHMARK(BM_Zeta)->Arg(32)->Arg(64)->Arg(128);

void BM_PrimeZetaDirect(benchmark::State& state) {
  TruncationPolicy p;
  p.prime_limit = static_cast<std::uint64_t>(state.range(0));
  p.tail_tol = 1e-300;
  const std::complex<double> s(1.2, 5.0);
  for (auto _ : state) benchmark::DoNotOptimize(prime_zeta_direct(s, p, table()).value);
}
BENCHMARK(BM_PrimeZetaDirect)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_PrimeZetaMobius(benchmark::State& state) {
  const auto mu = mobius_table(100);
  TruncationPolicy p;
  for (auto _ : state) benchmark::DoNotOptimize(prime_zeta_mobius({0.75, 3.0}, p, mu).value);
}
BENCHMARK(BM_PrimeZetaMobius);

void BM_ErrorTable(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(approx_error_table(10'000, table(), threads).data());
}
BENCHMARK(BM_ErrorTable)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
