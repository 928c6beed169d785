// Copyright 2026 The eulbsim authors
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

#include "eulb/entropy.hpp"
#include "eulb/optimize.hpp"
#include "eulb/scenario.hpp"

namespace {

eulb::ScenarioConfig gad_scenario() {
  eulb::ScenarioConfig cfg;
  cfg.state = {eulb::StateKind::XState, 0.5, {0, 0, 0}};
  cfg.channel = {eulb::ChannelKind::GAD, 0.1, 0.1, 0.4, 0.4};
  return cfg;
}

void BM_HermitianEig4(benchmark::State& state) {
  const auto rho = eulb::bell_diagonal_p(0.37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eulb::hermitian_eig(rho.mat));
  }
}
BENCHMARK(BM_HermitianEig4);

void BM_Pipeline(benchmark::State& state) {
  const auto cfg = gad_scenario();
  const auto rho0 = eulb::build_initial_state(cfg);
  const auto [chA, chB] = eulb::build_channels(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        eulb::run_pipeline(rho0, {0.5, 1.0, 2.0, 3.0}, chA, chB));
  }
}
BENCHMARK(BM_Pipeline);

void BM_Objective(benchmark::State& state) {
  const auto cfg = gad_scenario();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eulb::objective(cfg, 0.5, 2.0, 3.0));
  }
}
BENCHMARK(BM_Objective);

void BM_GridOracle10(benchmark::State& state) {
  const auto cfg = gad_scenario();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eulb::grid_oracle(cfg, cfg.search, 10));
  }
}
BENCHMARK(BM_GridOracle10);

}  // namespace

BENCHMARK_MAIN();
