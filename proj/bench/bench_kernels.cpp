#include <benchmark/benchmark.h>

#include "bioct/liealg.hpp"
#include "bioct/linalg/modular.hpp"
#include "bioct/random_stream.hpp"

using namespace bioct;

namespace {

const linalg::PrimeField& field() {
  static const linalg::PrimeField f(linalg::primes_below(1ULL << 31, 1)[0]);
  return f;
}

linalg::ModMatrix random_matrix(std::size_t n) {
  RandomStream rng(n);
  linalg::ModMatrix m(n, n);
  for (auto& x : m.a) x = rng.uniform(field().modulus());
  return m;
}

void BM_RrefSerial(benchmark::State& state) {
  const auto base = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto m = base;
    benchmark::DoNotOptimize(linalg::rref_serial(m, field()));
  }
}

void BM_RrefParallel(benchmark::State& state) {
  const auto base = random_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto m = base;
    benchmark::DoNotOptimize(linalg::rref_parallel(m, field()));
  }
}

void derivations(benchmark::State& state, linalg::Kernel kernel) {
  const auto carrier = jordan_carrier(AlgebraName::O);
  linalg::NullspaceOptions opts;
  opts.kernel = kernel;
  for (auto _ : state) benchmark::DoNotOptimize(derivation_basis(carrier, opts).dim());
}

void BM_DerivationsSerial(benchmark::State& state) { derivations(state, linalg::Kernel::Serial); }
void BM_DerivationsParallel(benchmark::State& state) { derivations(state, linalg::Kernel::Parallel); }

}  // namespace

BENCHMARK(BM_RrefSerial)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefParallel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DerivationsSerial)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK(BM_DerivationsParallel)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
