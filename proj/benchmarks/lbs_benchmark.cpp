#include <benchmark/benchmark.h>

#include "balseg/gen.hpp"
#include "balseg/linear.hpp"
#include "balseg/oracle.hpp"

namespace {

using balseg::gen::Kind;

template <Kind K>
void BM_Lbsl(benchmark::State& state) {
  const std::string s = balseg::gen::generate({K, static_cast<std::size_t>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(balseg::lbsl_linear(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetComplexityN(state.range(0));
}

template <Kind K>
void BM_Lbs(benchmark::State& state) {
  const std::string s = balseg::gen::generate({K, static_cast<std::size_t>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(balseg::lbs_linear(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetComplexityN(state.range(0));
}

void BM_Oracle(benchmark::State& state) {
  const std::string s =
      balseg::gen::gen_uniform({Kind::uniform, static_cast<std::size_t>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(balseg::oracle::lbs_spec(s));
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_Lbsl<Kind::uniform>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();
BENCHMARK(BM_Lbsl<Kind::adversarial_deep>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();
BENCHMARK(BM_Lbs<Kind::uniform>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();
BENCHMARK(BM_Lbs<Kind::adversarial_deep>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();
BENCHMARK(BM_Lbs<Kind::balanced>)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();
BENCHMARK(BM_Oracle)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

}  // namespace

BENCHMARK_MAIN();
