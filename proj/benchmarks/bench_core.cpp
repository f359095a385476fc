// Copyright 2026 The cvdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "cvdc/densecode.hpp"
#include "cvdc/monogamy.hpp"
#include "cvdc/optimize.hpp"
#include "cvdc/oracle.hpp"
#include "cvdc/standard_forms.hpp"

namespace {

void BM_HMax(benchmark::State& st) {
  const cvdc::ChannelStats stats = cvdc::pair_stats(cvdc::tmsv(0.9), 0, 1);
  for (auto _ : st) benchmark::DoNotOptimize(cvdc::h_max(stats, cvdc::EnergyBudget{10.0}));
}
BENCHMARK(BM_HMax);

void BM_Pipeline(benchmark::State& st) {
  const auto pair = cvdc::reduce(cvdc::pure_three_mode(1.2, 1.4, 0.9), {0, 1});
  for (auto _ : st) benchmark::DoNotOptimize(cvdc::optimize_pipeline(pair, 10.0));
}
BENCHMARK(BM_Pipeline);

void BM_ScanCell(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(cvdc::evaluate_cell(1.5, 10.0, 0.7, 0.4));
}
BENCHMARK(BM_ScanCell);

void BM_Certificate(benchmark::State& st) {
  const auto state = cvdc::pure_three_mode(1.5, 1.2, 1.1);
  for (auto _ : st) benchmark::DoNotOptimize(cvdc::monogamy_certificate(state, 10.0));
}
BENCHMARK(BM_Certificate);

void BM_MonteCarlo(benchmark::State& st) {
  cvdc::MCConfig cfg;
  cfg.samples = static_cast<std::size_t>(st.range(0));
  cfg.seed = 1;
  const auto model = cvdc::measurement_model(cvdc::tmsv(0.8));
  for (auto _ : st) {
    benchmark::DoNotOptimize(cvdc::monte_carlo_mi(model, {4.0, 4.0}, cfg, 1));
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
