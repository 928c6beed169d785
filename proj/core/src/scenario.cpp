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

#include "eulb/scenario.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

namespace eulb {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& context) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw config_error("unknown key '" + key + "' in " + context);
    }
  }
}

double get_number(const json& obj, const std::string& key) {
  if (!obj.contains(key)) {
    throw config_error("missing key '" + key + "'");
  }
  if (!obj[key].is_number()) {
    throw config_error("key '" + key + "' must be a number");
  }
  return obj[key].get<double>();
}

std::pair<double, double> get_range(const json& obj, const std::string& key,
                                    std::pair<double, double> fallback) {
  if (!obj.contains(key)) return fallback;
  const json& r = obj[key];
  if (!r.is_array() || r.size() != 2 || !r[0].is_number() ||
      !r[1].is_number()) {
    throw config_error("key '" + key + "' must be a [lo, hi] number pair");
  }
  const double lo = r[0].get<double>(), hi = r[1].get<double>();
  if (!(lo < hi)) {
    throw config_error("key '" + key + "' must satisfy lo < hi");
  }
  return {lo, hi};
}

InitialStateSpec parse_state(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw config_error(
        "'initial_state' must hold exactly one of: bell_diagonal_p, "
        "bell_diagonal_c, x_state");
  }
  InitialStateSpec s;
  if (j.contains("bell_diagonal_p")) {
    s.kind = StateKind::BellDiagonalP;
    if (!j["bell_diagonal_p"].is_number()) {
      throw config_error("key 'bell_diagonal_p' must be a number");
    }
    s.p = j["bell_diagonal_p"].get<double>();
  } else if (j.contains("bell_diagonal_c")) {
    s.kind = StateKind::BellDiagonalC;
    const json& c = j["bell_diagonal_c"];
    if (!c.is_array() || c.size() != 3) {
      throw config_error("key 'bell_diagonal_c' must be [c1, c2, c3]");
    }
    s.c = {c[0].get<double>(), c[1].get<double>(), c[2].get<double>()};
  } else if (j.contains("x_state")) {
    s.kind = StateKind::XState;
    if (!j["x_state"].is_number()) {
      throw config_error("key 'x_state' must be a number");
    }
    s.p = j["x_state"].get<double>();
  } else {
    throw config_error("unknown key '" + j.items().begin().key() +
                       "' in initial_state");
  }
  return s;
}

ChannelSpec parse_channel(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw config_error(
        "'channel' must hold exactly one of: gad, ad, depolarizing, identity");
  }
  ChannelSpec c;
  if (j.contains("gad")) {
    const json& a = j["gad"];
    if (!a.is_array() || a.size() != 4) {
      throw config_error("key 'gad' must be [pA, rA, pB, rB]");
    }
    c = {ChannelKind::GAD, a[0].get<double>(), a[1].get<double>(),
         a[2].get<double>(), a[3].get<double>()};
  } else if (j.contains("ad")) {
    const json& a = j["ad"];
    if (!a.is_array() || a.size() != 2) {
      throw config_error("key 'ad' must be [pA, pB]");
    }
    c.kind = ChannelKind::AD;
    c.pA = a[0].get<double>();
    c.pB = a[1].get<double>();
  } else if (j.contains("depolarizing")) {
    const json& a = j["depolarizing"];
    if (!a.is_array() || a.size() != 2) {
      throw config_error("key 'depolarizing' must be [rA, rB]");
    }
    c.kind = ChannelKind::Depolarizing;
    c.rA = a[0].get<double>();
    c.rB = a[1].get<double>();
  } else if (j.contains("identity")) {
    c.kind = ChannelKind::Identity;
  } else {
    throw config_error("unknown key '" + j.items().begin().key() +
                       "' in channel");
  }
  return c;
}

}  // namespace

QubitBasis named_basis(const std::string& name) {
  if (name == "sigma_x") return sigma_x_basis();
  if (name == "sigma_y") return sigma_y_basis();
  if (name == "sigma_z") return sigma_z_basis();
  throw config_error("unknown basis '" + name +
                     "' (expected sigma_x, sigma_y, or sigma_z)");
}

DensityMatrix build_initial_state(const ScenarioConfig& cfg) {
  switch (cfg.state.kind) {
    case StateKind::BellDiagonalP:
      return bell_diagonal_p(cfg.state.p);
    case StateKind::BellDiagonalC:
      return bell_diagonal(cfg.state.c);
    case StateKind::XState:
      return x_state({cfg.state.p});
  }
  throw std::logic_error("unreachable");
}

std::pair<KrausChannel, KrausChannel> build_channels(
    const ScenarioConfig& cfg) {
  const ChannelSpec& c = cfg.channel;
  switch (c.kind) {
    case ChannelKind::Identity:
      return {identity_channel(), identity_channel()};
    case ChannelKind::AD:
      return {amplitude_damping(c.pA), amplitude_damping(c.pB)};
    case ChannelKind::GAD:
      return {generalized_amplitude_damping(c.pA, c.rA),
              generalized_amplitude_damping(c.pB, c.rB)};
    case ChannelKind::Depolarizing:
      return {depolarizing(c.rA), depolarizing(c.rB)};
  }
  throw std::logic_error("unreachable");
}

ObservablePair build_observables(const ScenarioConfig& cfg) {
  return {named_basis(cfg.q_name), named_basis(cfg.r_name)};
}

ScenarioConfig parse_scenario(const json& j) {
  if (!j.is_object()) {
    throw config_error("configuration root must be an object");
  }
  reject_unknown_keys(
      j, {"initial_state", "channel", "observables", "search", "optimizer"},
      "configuration root");
  if (!j.contains("initial_state")) {
    throw config_error("missing key 'initial_state'");
  }
  if (!j.contains("channel")) {
    throw config_error("missing key 'channel'");
  }

  ScenarioConfig cfg;
  cfg.state = parse_state(j["initial_state"]);
  cfg.channel = parse_channel(j["channel"]);

  if (j.contains("observables")) {
    const json& o = j["observables"];
    reject_unknown_keys(o, {"q", "r"}, "observables");
    if (o.contains("q")) cfg.q_name = o["q"].get<std::string>();
    if (o.contains("r")) cfg.r_name = o["r"].get<std::string>();
    named_basis(cfg.q_name);
    named_basis(cfg.r_name);
  }

  if (j.contains("search")) {
    const json& s = j["search"];
    reject_unknown_keys(s, {"m_range", "n1_range", "n2_range"}, "search");
    cfg.search.m_range = get_range(s, "m_range", cfg.search.m_range);
    cfg.search.n1_range = get_range(s, "n1_range", cfg.search.n1_range);
    cfg.search.n2_range = get_range(s, "n2_range", cfg.search.n2_range);
    if (cfg.search.m_range.first < 0.0) {
      throw config_error("key 'm_range' lower bound must be >= 0");
    }
    if (cfg.search.n1_range.first <= 0.0 || cfg.search.n2_range.first <= 0.0) {
      throw config_error("log-scaled n ranges need positive lower bounds");
    }
  }

  if (j.contains("optimizer")) {
    const json& o = j["optimizer"];
    reject_unknown_keys(o,
                        {"population", "generations", "seed", "elite_fraction",
                         "mutation_scale"},
                        "optimizer");
    if (o.contains("population"))
      cfg.optimizer.population = o["population"].get<int>();
    if (o.contains("generations"))
      cfg.optimizer.generations = o["generations"].get<int>();
    if (o.contains("seed")) cfg.optimizer.seed = o["seed"].get<std::uint64_t>();
    if (o.contains("elite_fraction"))
      cfg.optimizer.elite_fraction = get_number(o, "elite_fraction");
    if (o.contains("mutation_scale"))
      cfg.optimizer.mutation_scale = get_number(o, "mutation_scale");
    if (cfg.optimizer.population < 4) {
      throw config_error("key 'population' must be >= 4");
    }
    if (cfg.optimizer.generations < 1) {
      throw config_error("key 'generations' must be >= 1");
    }
  }

  // Range checks that the builders would also raise, surfaced here as
  // config errors with key names.
  try {
    build_initial_state(cfg);
    build_channels(cfg);
  } catch (const std::invalid_argument& e) {
    throw config_error(std::string("invalid parameter: ") + e.what());
  } catch (const not_a_state_error& e) {
    throw config_error(std::string("invalid initial_state: ") + e.what());
  }
  return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error("cannot open config file '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw config_error("malformed JSON in '" + path + "': " + e.what());
  }
  return parse_scenario(j);
}

json scenario_to_json(const ScenarioConfig& cfg) {
  json j;
  switch (cfg.state.kind) {
    case StateKind::BellDiagonalP:
      j["initial_state"] = {{"bell_diagonal_p", cfg.state.p}};
      break;
    case StateKind::BellDiagonalC:
      j["initial_state"] = {
          {"bell_diagonal_c", {cfg.state.c.c1, cfg.state.c.c2, cfg.state.c.c3}}};
      break;
    case StateKind::XState:
      j["initial_state"] = {{"x_state", cfg.state.p}};
      break;
  }
  switch (cfg.channel.kind) {
    case ChannelKind::Identity:
      j["channel"] = {{"identity", true}};
      break;
    case ChannelKind::AD:
      j["channel"] = {{"ad", {cfg.channel.pA, cfg.channel.pB}}};
      break;
    case ChannelKind::GAD:
      j["channel"] = {{"gad",
                       {cfg.channel.pA, cfg.channel.rA, cfg.channel.pB,
                        cfg.channel.rB}}};
      break;
    case ChannelKind::Depolarizing:
      j["channel"] = {{"depolarizing", {cfg.channel.rA, cfg.channel.rB}}};
      break;
  }
  j["observables"] = {{"q", cfg.q_name}, {"r", cfg.r_name}};
  j["search"] = {
      {"m_range", {cfg.search.m_range.first, cfg.search.m_range.second}},
      {"n1_range", {cfg.search.n1_range.first, cfg.search.n1_range.second}},
      {"n2_range", {cfg.search.n2_range.first, cfg.search.n2_range.second}}};
  j["optimizer"] = {{"population", cfg.optimizer.population},
                    {"generations", cfg.optimizer.generations},
                    {"seed", cfg.optimizer.seed},
                    {"elite_fraction", cfg.optimizer.elite_fraction},
                    {"mutation_scale", cfg.optimizer.mutation_scale}};
  return j;
}

std::uint64_t scenario_digest(const ScenarioConfig& cfg) {
  // nlohmann::json objects serialize with sorted keys, so the dump is
  // canonical regardless of input key order.
  const std::string dump = scenario_to_json(cfg).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

ScenarioConfig make_scenario(InitialStateSpec state, ChannelSpec channel) {
  ScenarioConfig cfg;
  cfg.state = state;
  cfg.channel = channel;
  return cfg;
}

InitialStateSpec bell_p(double p) {
  return {StateKind::BellDiagonalP, p, {0, 0, 0}};
}
InitialStateSpec x_st(double p) { return {StateKind::XState, p, {0, 0, 0}}; }
ChannelSpec gad4(double pA, double rA, double pB, double rB) {
  return {ChannelKind::GAD, pA, rA, pB, rB};
}
ChannelSpec dep2(double rA, double rB) {
  return {ChannelKind::Depolarizing, 0, rA, 0, rB};
}

}  // namespace

std::vector<std::string> preset_figure_ids() {
  return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"};
}

std::vector<FigurePreset> presets_for(const std::string& figure) {
  // Where a figure's caption and body text disagree, both readings ship.
  if (figure == "fig2") {
    return {{figure, "", make_scenario(bell_p(0.0), gad4(0.9, 0.1, 0.9, 0.4))}};
  }
  if (figure == "fig3") {
    return {{figure, "caption",
             make_scenario(bell_p(0.2), gad4(0.9, 0.9, 0.4, 0.9))},
            {figure, "text",
             make_scenario(bell_p(0.9), gad4(0.1, 0.9, 0.4, 0.9))}};
  }
  if (figure == "fig4") {
    return {{figure, "caption", make_scenario(bell_p(0.0), dep2(0.9, 0.9))},
            {figure, "text", make_scenario(bell_p(0.0), dep2(0.1, 0.9))}};
  }
  if (figure == "fig5") {
    return {{figure, "", make_scenario(bell_p(1.0), dep2(0.9, 0.1))}};
  }
  if (figure == "fig6") {
    return {{figure, "", make_scenario(x_st(0.5), gad4(0.1, 0.1, 0.4, 0.4))}};
  }
  if (figure == "fig7") {
    return {{figure, "", make_scenario(x_st(0.2), gad4(0.1, 0.1, 0.2, 0.2))}};
  }
  if (figure == "fig8") {
    return {{figure, "", make_scenario(x_st(0.5), dep2(0.4, 0.1))}};
  }
  if (figure == "fig9") {
    // The caption repeats the fig7 parameters; the body text describes a
    // depolarizing scenario. Text is the primary reading.
    return {{figure, "text", make_scenario(x_st(1.0), dep2(0.4, 0.1))},
            {figure, "caption",
             make_scenario(x_st(0.2), gad4(0.1, 0.1, 0.2, 0.2))}};
  }
  throw config_error("unknown figure id '" + figure + "'");
}

std::vector<FigurePreset> all_presets() {
  std::vector<FigurePreset> out;
  for (const auto& id : preset_figure_ids()) {
    for (auto& p : presets_for(id)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Expectation> parse_expectations(const json& j) {
  if (!j.is_array()) {
    throw config_error("expectation table must be a JSON array");
  }
  std::vector<Expectation> out;
  for (const json& e : j) {
    reject_unknown_keys(e,
                        {"figure", "expected_min", "expected_baseline",
                         "tolerance", "advisory_tolerance"},
                        "expectation entry");
    Expectation ex;
    ex.figure = e.at("figure").get<std::string>();
    ex.expected_min = get_number(e, "expected_min");
    ex.expected_baseline = get_number(e, "expected_baseline");
    if (e.contains("tolerance")) ex.tolerance = get_number(e, "tolerance");
    if (e.contains("advisory_tolerance")) {
      ex.advisory_tolerance = get_number(e, "advisory_tolerance");
    }
    out.push_back(ex);
  }
  return out;
}

std::vector<Expectation> load_expectations(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error("cannot open expectation table '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw config_error("malformed JSON in '" + path + "': " + e.what());
  }
  return parse_expectations(j);
}

}  // namespace eulb
