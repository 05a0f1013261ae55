// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "brace/brace.hpp"
#include "brace/kernels.hpp"

using namespace brace;

namespace {

FiniteBrace elementary(int rank) {
  IntVector f(static_cast<std::size_t>(rank), Integer(2));
  return FiniteBrace::trivial(FgAbelianGroup(f));
}

template <bool Parallel>
void BM_associativity(benchmark::State& state) {
  FiniteBrace e = FiniteBrace::trivial_cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? kernels::associativity_failure_parallel(e.circ_table())
                      : kernels::associativity_failure_serial(e.circ_table());
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}

template <bool Parallel>
void BM_compatibility(benchmark::State& state) {
  FiniteBrace e = FiniteBrace::trivial_cyclic(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = Parallel ? kernels::compatibility_failure_parallel(e.add_table(), e.circ_table())
                      : kernels::compatibility_failure_serial(e.add_table(), e.circ_table());
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_automorphisms(benchmark::State& state) {
  FiniteBrace e = elementary(static_cast<int>(state.range(0)));
  auto s = kernels::make_automorphism_search(e.add_table(), nullptr);
  for (auto _ : state) {
    auto r = Parallel ? kernels::automorphism_search_parallel(s) : kernels::automorphism_search_serial(s);
    benchmark::DoNotOptimize(r.data());
  }
}

template <bool Parallel>
void BM_tabulate(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  auto f = [](std::size_t i) {
    unsigned x = static_cast<unsigned>(i);
    for (int k = 0; k < 64; ++k) x = x * 1103515245u + 12345u;
    return static_cast<int>(x >> 16);
  };
  for (auto _ : state) {
    auto r = Parallel ? kernels::tabulate_parallel(count, f) : kernels::tabulate_serial(count, f);
    benchmark::DoNotOptimize(r.data());
  }
}

}  // namespace

BENCHMARK(BM_associativity<false>)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_associativity<true>)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_compatibility<false>)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_compatibility<true>)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_automorphisms<false>)->Arg(3)->Arg(4);
BENCHMARK(BM_automorphisms<true>)->Arg(3)->Arg(4);
BENCHMARK(BM_tabulate<false>)->Arg(1 << 16);
BENCHMARK(BM_tabulate<true>)->Arg(1 << 16);

BENCHMARK_MAIN();
