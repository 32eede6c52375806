#include <benchmark/benchmark.h>

#include <vector>

#include "senvr/enumerate.h"
#include "senvr/harness.h"
#include "senvr/majority.h"
#include "senvr/sen_check.h"

namespace senvr {
namespace {

std::vector<Profile> Sample(std::size_t m, std::size_t n) {
  std::vector<Profile> profiles;
  for (std::uint64_t trial = 0; trial < 256; ++trial) {
    profiles.push_back(RandomProfile(m, n, 1, trial));
  }
  return profiles;
}

void BM_SenCondition(benchmark::State& state) {
  const auto profiles = Sample(state.range(0), state.range(1));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SenCondition(profiles[i++ % profiles.size()]));
  }
}
BENCHMARK(BM_SenCondition)->Args({3, 3})->Args({5, 7})->Args({8, 15});

void BM_MajorityTransitivity(benchmark::State& state) {
  const auto profiles = Sample(state.range(0), state.range(1));
  std::size_t i = 0;
  for (auto _ : state) {
    const SocialRelation r =
        MajorityRelation(PairwiseTallies(profiles[i++ % profiles.size()]));
    benchmark::DoNotOptimize(CheckTransitivity(r));
  }
}
BENCHMARK(BM_MajorityTransitivity)->Args({5, 7})->Args({8, 15});

void BM_EnumerateWeakOrders(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateWeakOrders(state.range(0)));
  }
}
BENCHMARK(BM_EnumerateWeakOrders)->DenseRange(3, 5);

void BM_ExhaustiveHarness(benchmark::State& state) {
  const HarnessConfig config{.alternatives = 3,
                             .voters = static_cast<std::size_t>(state.range(0)),
                             .mode = HarnessMode::kExhaustive,
                             .threads = 1};
  for (auto _ : state) benchmark::DoNotOptimize(RunHarness(config));
}
BENCHMARK(BM_ExhaustiveHarness)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace senvr

BENCHMARK_MAIN();
