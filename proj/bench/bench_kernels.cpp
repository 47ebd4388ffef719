// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <set>

#include "centrax/congruence.hpp"
#include "centrax/fixtures.hpp"
#include "centrax/kernels.hpp"

using namespace centrax;

namespace {

  std::vector<Congruence> principals(FiniteAlgebra const& a) {
    std::set<Congruence> seen;
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = x + 1; y < a.size(); ++y) {
        seen.insert(principal(a, x, y));
      }
    }
    return {seen.begin(), seen.end()};
  }

  FiniteAlgebra const& sample() {
    static FiniteAlgebra const a = fixtures::meet_power(3);
    return a;
  }

  void join_closure_serial(benchmark::State& state) {
    auto const gens = principals(sample());
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::serial::join_closure(sample().size(), gens));
    }
  }

  void join_closure_parallel(benchmark::State& state) {
    auto const gens = principals(sample());
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::parallel::join_closure(sample().size(), gens));
    }
  }

  void factor_pairs_serial(benchmark::State& state) {
    auto const con = all_congruences(sample());
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::serial::factor_pair_indices(con));
    }
  }

  void factor_pairs_parallel(benchmark::State& state) {
    auto const con = all_congruences(sample());
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::parallel::factor_pair_indices(con));
    }
  }

  // A predicate with some arithmetic in it so the scan is not memory bound.
  bool busy(std::size_t i) {
    std::size_t h = i;
    for (int r = 0; r < 64; ++r) {
      h = h * 6364136223846793005ULL + 1442695040888963407ULL;
    }
    return h != 0 || i != 0;
  }

  void first_failure_serial(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::serial::first_failure(n, busy));
    }
  }

  void first_failure_parallel(benchmark::State& state) {
    auto const n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(kernels::parallel::first_failure(n, busy));
    }
  }

}  // namespace

BENCHMARK(join_closure_serial);
BENCHMARK(join_closure_parallel);
BENCHMARK(factor_pairs_serial);
BENCHMARK(factor_pairs_parallel);
BENCHMARK(first_failure_serial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(first_failure_parallel)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
