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

#ifndef EULB_SCENARIO_HPP
#define EULB_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "eulb/channels.hpp"
#include "eulb/protocol.hpp"
#include "eulb/states.hpp"

namespace eulb {

/// Malformed or schema-violating configuration. The message names the
/// offending key.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optimizer search box. m is searched on a linear scale, n1/n2 on a
/// logarithmic scale (strictly positive lower bounds).
struct SearchSpace {
  std::pair<double, double> m_range{0.0, 3.0};
  std::pair<double, double> n1_range{1e-9, 1e5};
  std::pair<double, double> n2_range{1e-9, 1e5};
};

struct OptimizerConfig {
  int population = 64;
  int generations = 200;
  std::uint64_t seed = 1;
  double elite_fraction = 0.1;
  double mutation_scale = 0.1;  // in search-space coordinates
};

enum class StateKind { BellDiagonalP, BellDiagonalC, XState };

struct InitialStateSpec {
  StateKind kind = StateKind::BellDiagonalP;
  double p = 0.0;                      // BellDiagonalP / XState
  BellDiagonalParams c{0.0, 0.0, 0.0};  // BellDiagonalC
};

/// Per-qubit channel parameters; pB/rB address qubit B.
struct ChannelSpec {
  ChannelKind kind = ChannelKind::Identity;
  double pA = 0.0, rA = 0.0, pB = 0.0, rB = 0.0;
};

/// A complete experiment description.
struct ScenarioConfig {
  InitialStateSpec state;
  ChannelSpec channel;
  std::string q_name = "sigma_x";
  std::string r_name = "sigma_z";
  SearchSpace search;
  OptimizerConfig optimizer;
};

DensityMatrix build_initial_state(const ScenarioConfig& cfg);
std::pair<KrausChannel, KrausChannel> build_channels(const ScenarioConfig& cfg);
ObservablePair build_observables(const ScenarioConfig& cfg);
QubitBasis named_basis(const std::string& name);

/// Strict parse: unknown keys, wrong types, and out-of-range parameters
/// all raise config_error naming the key.
ScenarioConfig parse_scenario(const nlohmann::json& j);
ScenarioConfig load_scenario(const std::string& path);
nlohmann::json scenario_to_json(const ScenarioConfig& cfg);

/// FNV-1a over the canonical (key-sorted) serialization; stable under key
/// reordering of the config file.
std::uint64_t scenario_digest(const ScenarioConfig& cfg);

/// Built-in reproductions of the paper figures. Figures whose caption and
/// body text disagree ship both readings as variants.
struct FigurePreset {
  std::string figure;   // "fig2" .. "fig9"
  std::string variant;  // "", "caption", or "text"
  ScenarioConfig scenario;
};

std::vector<std::string> preset_figure_ids();
std::vector<FigurePreset> presets_for(const std::string& figure);
std::vector<FigurePreset> all_presets();

/// A reported value from the reference figure set, shipped as data.
struct Expectation {
  std::string figure;
  double expected_min = 0.0;
  double expected_baseline = 0.0;
  double tolerance = 0.02;
  std::optional<double> advisory_tolerance;
};

std::vector<Expectation> parse_expectations(const nlohmann::json& j);
std::vector<Expectation> load_expectations(const std::string& path);

}  // namespace eulb

#endif  // EULB_SCENARIO_HPP
