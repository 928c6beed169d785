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

#include "eulb/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "eulb/entropy.hpp"

namespace eulb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct EvalContext {
  DensityMatrix rho0;
  KrausChannel chA, chB;
  ObservablePair obs;
};

EvalContext make_context(const ScenarioConfig& scenario) {
  auto [chA, chB] = build_channels(scenario);
  return {build_initial_state(scenario), std::move(chA), std::move(chB),
          build_observables(scenario)};
}

double eval_objective(const EvalContext& ctx, double m, double n1, double n2) {
  try {
    const PipelineReport rep =
        run_pipeline(ctx.rho0, {m, 1.0, n1, n2}, ctx.chA, ctx.chB);
    return eulb(rep.state_after_reversal, ctx.obs);
  } catch (const filter_annihilation_error&) {
    return kInf;
  }
}

// Genome in search-space coordinates: m linear, n1/n2 in log10.
struct Coords {
  double m, ln1, ln2;
};

struct Individual {
  Coords x;
  double fitness = kInf;
};

double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

// Equal objective values break ties toward the smaller parameter triple.
bool better(const Individual& a, const Individual& b) {
  if (a.fitness != b.fitness) return a.fitness < b.fitness;
  if (a.x.m != b.x.m) return a.x.m < b.x.m;
  if (a.x.ln1 != b.x.ln1) return a.x.ln1 < b.x.ln1;
  return a.x.ln2 < b.x.ln2;
}

struct Bounds {
  double m_lo, m_hi, l1_lo, l1_hi, l2_lo, l2_hi;
};

Bounds coord_bounds(const SearchSpace& space) {
  return {space.m_range.first,          space.m_range.second,
          std::log10(space.n1_range.first), std::log10(space.n1_range.second),
          std::log10(space.n2_range.first), std::log10(space.n2_range.second)};
}

OptimizationResult evolve_impl(const ScenarioConfig& scenario,
                               const SearchSpace& space,
                               const OptimizerConfig& cfg,
                               std::optional<double> fixed_m) {
  const EvalContext ctx = make_context(scenario);
  const Bounds b = coord_bounds(space);
  const int pop_size = cfg.population;
  const int elites = std::max(1, static_cast<int>(std::lround(
                                     cfg.elite_fraction * pop_size)));

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  long evaluations = 0;
  auto evaluate = [&](Individual& ind) {
    ind.fitness = eval_objective(ctx, ind.x.m, std::pow(10.0, ind.x.ln1),
                                 std::pow(10.0, ind.x.ln2));
    ++evaluations;
  };

  const double sigma_m = cfg.mutation_scale * (b.m_hi - b.m_lo);
  const double sigma_1 = cfg.mutation_scale * (b.l1_hi - b.l1_lo);
  const double sigma_2 = cfg.mutation_scale * (b.l2_hi - b.l2_lo);

  auto clamp_coords = [&](Coords& c) {
    c.m = fixed_m ? *fixed_m : clamp(c.m, b.m_lo, b.m_hi);
    c.ln1 = clamp(c.ln1, b.l1_lo, b.l1_hi);
    c.ln2 = clamp(c.ln2, b.l2_lo, b.l2_hi);
  };

  std::vector<Individual> pop(pop_size);
  for (auto& ind : pop) {
    ind.x = {b.m_lo + uni(rng) * (b.m_hi - b.m_lo),
             b.l1_lo + uni(rng) * (b.l1_hi - b.l1_lo),
             b.l2_lo + uni(rng) * (b.l2_hi - b.l2_lo)};
    clamp_coords(ind.x);
  }
  // The no-filter point is always a member of the initial population, so
  // the final minimum cannot exceed the baseline.
  pop[0].x = {fixed_m ? *fixed_m : 1.0, 0.0, 0.0};
  clamp_coords(pop[0].x);
  for (auto& ind : pop) evaluate(ind);

  // Rank-biased parent pick: quadratic weighting toward the front.
  auto pick_parent = [&]() -> const Individual& {
    const double u = uni(rng);
    const int idx = std::min(pop_size - 1,
                             static_cast<int>(u * u * pop_size));
    return pop[idx];
  };

  double best_at_three_quarters = kInf;
  for (int gen = 0; gen < cfg.generations; ++gen) {
    std::sort(pop.begin(), pop.end(), better);
    if (gen == (3 * cfg.generations) / 4) {
      best_at_three_quarters = pop[0].fitness;
    }

    std::vector<Individual> next(pop.begin(), pop.begin() + elites);
    while (static_cast<int>(next.size()) < pop_size) {
      const Individual& pa = pick_parent();
      const Individual& pb = pick_parent();
      Individual child;
      // Blend crossover per coordinate, then Gaussian mutation.
      auto blend = [&](double a, double c) {
        const double w = -0.25 + 1.5 * uni(rng);
        return w * a + (1.0 - w) * c;
      };
      child.x.m = blend(pa.x.m, pb.x.m) + sigma_m * gauss(rng);
      child.x.ln1 = blend(pa.x.ln1, pb.x.ln1) + sigma_1 * gauss(rng);
      child.x.ln2 = blend(pa.x.ln2, pb.x.ln2) + sigma_2 * gauss(rng);
      clamp_coords(child.x);
      evaluate(child);
      next.push_back(child);
    }
    pop = std::move(next);
  }
  std::sort(pop.begin(), pop.end(), better);

  OptimizationResult res;
  res.m = pop[0].x.m;
  res.n1 = std::pow(10.0, pop[0].x.ln1);
  res.n2 = std::pow(10.0, pop[0].x.ln2);
  res.eulb_min = pop[0].fitness;
  res.baseline = eval_objective(ctx, 1.0, 1.0, 1.0);
  res.evaluations = evaluations;
  res.converged = pop[0].fitness >= best_at_three_quarters - 1e-10;
  return res;
}

}  // namespace

double objective(const ScenarioConfig& scenario, double m, double n1,
                 double n2) {
  return eval_objective(make_context(scenario), m, n1, n2);
}

double baseline_value(const ScenarioConfig& scenario) {
  return objective(scenario, 1.0, 1.0, 1.0);
}

OptimizationResult grid_oracle(const ScenarioConfig& scenario,
                               const SearchSpace& space, int steps) {
  if (steps < 2) {
    throw std::invalid_argument("grid_oracle: steps must be >= 2");
  }
  const EvalContext ctx = make_context(scenario);
  const Bounds b = coord_bounds(space);

  auto lattice = [&](double lo, double hi, int i) {
    return lo + (hi - lo) * i / (steps - 1);
  };

  OptimizationResult res;
  res.eulb_min = kInf;
  for (int i = 0; i < steps; ++i) {
    const double m = lattice(b.m_lo, b.m_hi, i);
    for (int j = 0; j < steps; ++j) {
      const double n1 = std::pow(10.0, lattice(b.l1_lo, b.l1_hi, j));
      for (int k = 0; k < steps; ++k) {
        const double n2 = std::pow(10.0, lattice(b.l2_lo, b.l2_hi, k));
        const double v = eval_objective(ctx, m, n1, n2);
        ++res.evaluations;
        if (v < res.eulb_min) {
          res.eulb_min = v;
          res.m = m;
          res.n1 = n1;
          res.n2 = n2;
        }
      }
    }
  }
  res.baseline = eval_objective(ctx, 1.0, 1.0, 1.0);
  res.converged = true;
  return res;
}

OptimizationResult evolve(const ScenarioConfig& scenario,
                          const SearchSpace& space,
                          const OptimizerConfig& cfg) {
  return evolve_impl(scenario, space, cfg, std::nullopt);
}

SweepResult sweep_m(const ScenarioConfig& scenario, const SearchSpace& space,
                    const std::vector<double>& m_grid,
                    const OptimizerConfig& cfg) {
  SweepResult out;
  out.baseline = baseline_value(scenario);
  for (double m : m_grid) {
    const OptimizationResult r = evolve_impl(scenario, space, cfg, m);
    out.points.push_back({m, r.n1, r.n2, r.eulb_min});
  }
  return out;
}

}  // namespace eulb
