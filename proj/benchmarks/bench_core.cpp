// Copyright 2026 The ramsey-approx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <algorithm>

#include "ramsey/budget.hpp"
#include "ramsey/order.hpp"
#include "ramsey/space.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

static void BM_LexSort(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  auto nodes = build_S(3, n)->nodes;
  for (auto _ : state) {
    state.PauseTiming();
    std::reverse(nodes.begin(), nodes.end());
    state.ResumeTiming();
    std::sort(nodes.begin(), nodes.end(), LexLess{});
    benchmark::DoNotOptimize(nodes.data());
  }
}
BENCHMARK(BM_LexSort)->DenseRange(1, 3);

static void BM_Embeddings(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const auto source = build_S(2, 1);
  const auto target = build_S(2, m);
  for (auto _ : state) benchmark::DoNotOptimize(s_embeddings(*source, *target).size());
}
BENCHMARK(BM_Embeddings)->DenseRange(1, 3);

static void BM_EnumerateR(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_R(2, 1, m).size());
}
BENCHMARK(BM_EnumerateR)->DenseRange(1, 3);  // memoized after the first call

static void BM_CountCanonical(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_canonical(3, n));
}
BENCHMARK(BM_CountCanonical)->DenseRange(0, 4);

static void BM_CountDCFull(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_DC_full(3, 3));
}
BENCHMARK(BM_CountDCFull);

static void BM_Partitions(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(for_each_partition(size, [](const std::vector<int>&) { return true; }));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(bell_number(size).convert_to<std::uint64_t>()));
}
BENCHMARK(BM_Partitions)->DenseRange(6, 10, 2);

static void BM_Pigeonhole(benchmark::State& state) {
  search_jobs() = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pigeonhole_minimal_m(1, 1, 2, 5).m);
  search_jobs() = 1;
}
BENCHMARK(BM_Pigeonhole)->Arg(1)->Arg(4)->UseRealTime();

static void BM_Fct(benchmark::State& state) {
  search_jobs() = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fct_block_minimal_m(1, 0, 2, 4).m);
  search_jobs() = 1;
}
BENCHMARK(BM_Fct)->Arg(1)->Arg(4)->UseRealTime();

static void BM_DaggerThreshold(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dagger_threshold(2, {1, 1}, 4, 4, 10).threshold);
}
BENCHMARK(BM_DaggerThreshold)->Unit(benchmark::kMillisecond);

static void BM_Distinctness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_distinctness(2, 2, 6).unseparated);
}
BENCHMARK(BM_Distinctness)->Unit(benchmark::kMillisecond);

static void BM_Hasse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rk_hasse(2, 2, 3).edges.size());
}
BENCHMARK(BM_Hasse)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
