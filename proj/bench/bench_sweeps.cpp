// Serial reference vs OpenMP drivers for the whole-group sweeps.
//
//   ./bench_sweeps --benchmark_filter=Verify

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <string>

#include "schubert/sweep.hpp"
#include "schubert/theorem.hpp"

namespace {

const char* const kSystems[] = {"A4", "D4", "A5", "D5", "B3", "F4"};

const schubert::Group& group_for(int index) {
  static std::map<int, std::unique_ptr<schubert::Group>> cache;
  auto& slot = cache[index];
  if (!slot) slot = std::make_unique<schubert::Group>(schubert::build_system(kSystems[index]));
  return *slot;
}

void CrossValidateSerial(benchmark::State& state) {
  const auto& group = group_for(static_cast<int>(state.range(0)));
  state.SetLabel(group.system().label());
  for (auto _ : state) benchmark::DoNotOptimize(schubert::cross_validate_serial(group));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(group.size()));
}

void CrossValidateParallel(benchmark::State& state) {
  const auto& group = group_for(static_cast<int>(state.range(0)));
  const int jobs = static_cast<int>(state.range(1));
  state.SetLabel(group.system().label() + " jobs=" + std::to_string(jobs));
  for (auto _ : state) benchmark::DoNotOptimize(schubert::cross_validate_parallel(group, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(group.size()));
}

void VerifySerial(benchmark::State& state) {
  const auto& group = group_for(static_cast<int>(state.range(0)));
  const auto invs = schubert::involutions(group);
  state.SetLabel(group.system().label());
  for (auto _ : state) {
    benchmark::DoNotOptimize(schubert::classify_involutions_serial(group, invs));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(invs.size()));
}

void VerifyParallel(benchmark::State& state) {
  const auto& group = group_for(static_cast<int>(state.range(0)));
  const int jobs = static_cast<int>(state.range(1));
  const auto invs = schubert::involutions(group);
  state.SetLabel(group.system().label() + " jobs=" + std::to_string(jobs));
  for (auto _ : state) {
    benchmark::DoNotOptimize(schubert::classify_involutions_parallel(group, invs, jobs));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(invs.size()));
}

void EnumerateGroup(benchmark::State& state) {
  const auto system = schubert::build_system(kSystems[state.range(0)]);
  state.SetLabel(system->label());
  for (auto _ : state) benchmark::DoNotOptimize(schubert::Group(system));
}

}  // namespace

BENCHMARK(CrossValidateSerial)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(CrossValidateParallel)
    ->ArgsProduct({{0, 1, 2, 3, 4, 5}, {2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(VerifySerial)->Args({2})->Args({3})->Unit(benchmark::kMillisecond);
BENCHMARK(VerifyParallel)
    ->ArgsProduct({{2, 3}, {2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(EnumerateGroup)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
