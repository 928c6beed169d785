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

#ifndef EULB_OPTIMIZE_HPP
#define EULB_OPTIMIZE_HPP

#include <vector>

#include "eulb/scenario.hpp"

namespace eulb {

struct OptimizationResult {
  double m = 1.0, n1 = 1.0, n2 = 1.0;
  double eulb_min = 0.0;
  double baseline = 0.0;  // value at m = m2 = n1 = n2 = 1
  long evaluations = 0;
  bool converged = false;
};

/// The value minimized: the uncertainty lower bound of the pipeline output
/// with filters (m, 1, n1, n2). Filter annihilation maps to +infinity.
double objective(const ScenarioConfig& scenario, double m, double n1,
                 double n2);

/// The bound with identity filters, objective(1, 1, 1).
double baseline_value(const ScenarioConfig& scenario);

/// Exhaustive lattice minimum: `steps` points per axis, linear in m and
/// logarithmic in n1/n2. Deterministic; independent of evolve().
OptimizationResult grid_oracle(const ScenarioConfig& scenario,
                               const SearchSpace& space, int steps);

/// Seed-deterministic genetic search: rank selection, blend crossover and
/// Gaussian mutation in search-space coordinates, elitism. The point
/// (1,1,1) is injected into the initial population, so the result never
/// exceeds the baseline. Equal objective values break ties toward the
/// lexicographically smaller (m, n1, n2).
OptimizationResult evolve(const ScenarioConfig& scenario,
                          const SearchSpace& space,
                          const OptimizerConfig& cfg);

struct SweepPoint {
  double m = 0.0;
  double n1_opt = 1.0, n2_opt = 1.0;
  double eulb = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double baseline = 0.0;
};

/// For each m in the grid, optimize (n1, n2) only and record the
/// constrained minimum.
SweepResult sweep_m(const ScenarioConfig& scenario, const SearchSpace& space,
                    const std::vector<double>& m_grid,
                    const OptimizerConfig& cfg);

}  // namespace eulb

#endif  // EULB_OPTIMIZE_HPP
