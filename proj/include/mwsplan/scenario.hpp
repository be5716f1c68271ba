// Copyright 2026 The mwsplan Authors.
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

// Scenario files, ART sweeps and the CSV formats the tools read and write.
//
// A scenario file is JSON:
//
//   {
//     "topology": "nobel-germany.json",        // relative to the file
//     "art_sweep": {"min": 20, "max": 200, "step": 10},
//     "policies": [
//       {"mode": "sws"},
//       {"mode": "flexible_fsr", "penalty_db": [1, 3, 5], "n_lines": [4, 8]},
//       {"mode": "fixed_fsr", "n_lines": 4, "n_cutoff": [1, 2, 3, 4]}
//     ],
//     "fiber": {"attenuation_db_per_km": 0.2},
//     "planner": {"k": 3, "final_lp_rule": "smallest_covering"},
//     "output_dir": "out"
//   }
//
// List-valued policy fields expand into one variant per combination.

#ifndef MWSPLAN_SCENARIO_HPP_
#define MWSPLAN_SCENARIO_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "mwsplan/metrics.hpp"
#include "mwsplan/netgraph.hpp"
#include "mwsplan/phys.hpp"
#include "mwsplan/planner.hpp"
#include "mwsplan/txmodel.hpp"

namespace mwsplan {

// Invalid scenario or CLI input. Distinct from internal failures.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal form that reads back to the same double.
inline std::string FormatNumber(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline double ParseNumber(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ConfigError("not a number: '" + s + "'");
  }
  return v;
}

struct ArtSweep {
  double min_tbps = 20.0;
  double max_tbps = 200.0;
  double step_tbps = 10.0;

  // Points are min + i * step; computed by index so they do not drift.
  std::vector<double> Points() const {
    const int n = SweepPointCount(min_tbps, max_tbps, step_tbps);
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(min_tbps + i * step_tbps);
    return out;
  }
};

struct ScenarioConfig {
  std::string topology_path;      // as written in the file
  std::string resolved_topology;  // opened on disk
  ArtSweep art;
  std::vector<PlannerPolicy> variants;
  FiberParams fiber;
  std::string output_dir;
  nlohmann::json resolved;  // echoed into every CSV

  void Validate() const {
    if (!(art.min_tbps > 0.0)) throw ConfigError("art_sweep.min must be > 0");
    if (!(art.step_tbps > 0.0)) throw ConfigError("art_sweep.step must be > 0");
    if (art.max_tbps < art.min_tbps) throw ConfigError("art_sweep.max < art_sweep.min");
    if (variants.empty()) throw ConfigError("no policies given");
    try {
      fiber.Validate();
      for (const PlannerPolicy& p : variants) p.Validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
};

namespace internal {

inline void RejectUnknownKeys(const nlohmann::json& obj, const std::string& where,
                              std::initializer_list<const char*> known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(known.begin(), known.end(), [&](const char* k) {
          return it.key() == k;
        }) == known.end()) {
      throw ConfigError(where + ": unknown key '" + it.key() + "'");
    }
  }
}

template <typename T>
std::vector<T> ScalarOrList(const nlohmann::json& obj, const char* key,
                            std::vector<T> fallback) {
  if (!obj.contains(key)) return fallback;
  const nlohmann::json& v = obj.at(key);
  std::vector<T> out;
  if (v.is_array()) {
    for (const nlohmann::json& x : v) out.push_back(x.get<T>());
  } else {
    out.push_back(v.get<T>());
  }
  if (out.empty()) throw ConfigError(std::string("empty list for '") + key + "'");
  return out;
}

inline PolicyMode ParseMode(const std::string& s) {
  if (s == "sws") return PolicyMode::kSws;
  if (s == "fixed_fsr") return PolicyMode::kFixedFsr;
  if (s == "flexible_fsr") return PolicyMode::kFlexibleFsr;
  throw ConfigError("unknown policy mode '" + s + "'");
}

inline void ExpandPolicy(const nlohmann::json& jp, const PlannerPolicy& base,
                         std::vector<PlannerPolicy>* out) {
  if (!jp.is_object()) throw ConfigError("policy must be an object");
  RejectUnknownKeys(jp, "policy", {"mode", "n_lines", "n_cutoff", "penalty_db"});
  if (!jp.contains("mode")) throw ConfigError("policy: missing 'mode'");
  const PolicyMode mode = ParseMode(jp.at("mode").get<std::string>());
  if (mode == PolicyMode::kSws) {
    PlannerPolicy p = base;
    p.mode = PolicyMode::kSws;
    p.osnr_tx_penalty_db = 0.0;
    out->push_back(p);
    return;
  }
  if (mode == PolicyMode::kFlexibleFsr && !jp.contains("penalty_db")) {
    throw ConfigError("flexible_fsr policy needs 'penalty_db'");
  }
  const std::vector<double> penalties = ScalarOrList<double>(jp, "penalty_db", {1.0});
  const std::vector<int> lines = ScalarOrList<int>(jp, "n_lines", {4});
  for (double pen : penalties) {
    for (int n : lines) {
      std::vector<int> cutoffs = {0};
      if (mode == PolicyMode::kFixedFsr) {
        if (jp.contains("n_cutoff") && jp.at("n_cutoff") == "all") {
          cutoffs.clear();
          for (int c = 1; c <= n; ++c) cutoffs.push_back(c);
        } else {
          cutoffs = ScalarOrList<int>(jp, "n_cutoff", {1});
        }
      } else if (jp.contains("n_cutoff")) {
        throw ConfigError("n_cutoff only applies to fixed_fsr");
      }
      for (int c : cutoffs) {
        PlannerPolicy p = base;
        p.mode = mode;
        p.osnr_tx_penalty_db = pen;
        p.n_lines = n;
        p.n_cutoff = mode == PolicyMode::kFixedFsr ? c : 1;
        out->push_back(p);
      }
    }
  }
}

inline void ApplyFiber(const nlohmann::json& jf, FiberParams* f) {
  if (!jf.is_object()) throw ConfigError("fiber must be an object");
  RejectUnknownKeys(jf, "fiber",
                    {"attenuation_db_per_km", "beta2_ps2_per_km", "gamma_per_w_km",
                     "span_length_km", "span_amp_noise_figure_db",
                     "nli_loaded_bandwidth_ghz", "reference_launch_dbm",
                     "reference_symbol_rate_gbd"});
  f->attenuation_db_per_km = jf.value("attenuation_db_per_km", f->attenuation_db_per_km);
  f->beta2_ps2_per_km = jf.value("beta2_ps2_per_km", f->beta2_ps2_per_km);
  f->gamma_per_w_km = jf.value("gamma_per_w_km", f->gamma_per_w_km);
  f->span_length_km = jf.value("span_length_km", f->span_length_km);
  f->span_amp_noise_figure_db =
      jf.value("span_amp_noise_figure_db", f->span_amp_noise_figure_db);
  f->nli_loaded_bandwidth_ghz =
      jf.value("nli_loaded_bandwidth_ghz", f->nli_loaded_bandwidth_ghz);
  f->reference_launch_dbm = jf.value("reference_launch_dbm", f->reference_launch_dbm);
  f->reference_symbol_rate_gbd =
      jf.value("reference_symbol_rate_gbd", f->reference_symbol_rate_gbd);
}

inline void ApplyPlanner(const nlohmann::json& jp, PlannerPolicy* p) {
  if (!jp.is_object()) throw ConfigError("planner must be an object");
  RejectUnknownKeys(jp, "planner",
                    {"k", "base_osnr_tx_db", "final_lp_rule", "route_search"});
  p->k = jp.value("k", p->k);
  p->base_osnr_tx_db = jp.value("base_osnr_tx_db", p->base_osnr_tx_db);
  if (jp.contains("final_lp_rule")) {
    const std::string r = jp.at("final_lp_rule").get<std::string>();
    if (r == "smallest_covering") {
      p->final_lp_rule = FinalLpRule::kSmallestCovering;
    } else if (r == "highest_rate") {
      p->final_lp_rule = FinalLpRule::kHighestRate;
    } else {
      throw ConfigError("unknown final_lp_rule '" + r + "'");
    }
  }
  if (jp.contains("route_search")) {
    const std::string r = jp.at("route_search").get<std::string>();
    if (r == "target_first") {
      p->route_search = RouteSearch::kTargetFirst;
    } else if (r == "first_route") {
      p->route_search = RouteSearch::kFirstRoute;
    } else {
      throw ConfigError("unknown route_search '" + r + "'");
    }
  }
}

inline nlohmann::json PolicyJson(const PlannerPolicy& p) {
  nlohmann::json j;
  j["mode"] = PolicyModeName(p.mode);
  if (p.mode != PolicyMode::kSws) {
    j["n_lines"] = p.n_lines;
    j["penalty_db"] = p.osnr_tx_penalty_db;
  }
  if (p.mode == PolicyMode::kFixedFsr) j["n_cutoff"] = p.n_cutoff;
  return j;
}

}  // namespace internal

// Builds the echo of the fully resolved configuration (defaults included).
inline nlohmann::json ResolvedConfigJson(const ScenarioConfig& c) {
  using nlohmann::json;
  json j;
  j["topology"] = c.topology_path;
  j["art_sweep"] = {{"min", c.art.min_tbps}, {"max", c.art.max_tbps}, {"step", c.art.step_tbps}};
  json policies = json::array();
  for (const PlannerPolicy& p : c.variants) policies.push_back(internal::PolicyJson(p));
  j["policies"] = policies;
  const FiberParams& f = c.fiber;
  j["fiber"] = {{"attenuation_db_per_km", f.attenuation_db_per_km},
                {"beta2_ps2_per_km", f.beta2_ps2_per_km},
                {"gamma_per_w_km", f.gamma_per_w_km},
                {"span_length_km", f.span_length_km},
                {"span_amp_noise_figure_db", f.span_amp_noise_figure_db},
                {"nli_loaded_bandwidth_ghz", f.nli_loaded_bandwidth_ghz},
                {"reference_launch_dbm", f.reference_launch_dbm},
                {"reference_symbol_rate_gbd", f.reference_symbol_rate_gbd}};
  const PlannerPolicy& p = c.variants.empty() ? PlannerPolicy{} : c.variants.front();
  j["planner"] = {
      {"k", p.k},
      {"base_osnr_tx_db", p.base_osnr_tx_db},
      {"final_lp_rule", p.final_lp_rule == FinalLpRule::kSmallestCovering
                            ? "smallest_covering"
                            : "highest_rate"},
      {"route_search",
       p.route_search == RouteSearch::kTargetFirst ? "target_first" : "first_route"}};
  return j;
}

// `base_dir` anchors a relative topology path.
inline ScenarioConfig ParseScenarioConfig(const std::string& document,
                                          const std::filesystem::path& base_dir = {}) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  ScenarioConfig c;
  try {
    internal::RejectUnknownKeys(doc, "config",
                                {"topology", "art_sweep", "policy", "policies", "fiber",
                                 "planner", "output_dir"});
    if (!doc.contains("topology")) throw ConfigError("config: missing 'topology'");
    c.topology_path = doc.at("topology").get<std::string>();
    std::filesystem::path tp(c.topology_path);
    c.resolved_topology = (tp.is_absolute() ? tp : base_dir / tp).lexically_normal().string();
    if (doc.contains("art_sweep")) {
      const json& a = doc.at("art_sweep");
      internal::RejectUnknownKeys(a, "art_sweep", {"min", "max", "step"});
      c.art.min_tbps = a.value("min", c.art.min_tbps);
      c.art.max_tbps = a.value("max", c.art.max_tbps);
      c.art.step_tbps = a.value("step", c.art.step_tbps);
    }
    PlannerPolicy base;
    if (doc.contains("planner")) internal::ApplyPlanner(doc.at("planner"), &base);
    if (doc.contains("fiber")) internal::ApplyFiber(doc.at("fiber"), &c.fiber);
    if (doc.contains("policy") && doc.contains("policies")) {
      throw ConfigError("config: give either 'policy' or 'policies'");
    }
    if (doc.contains("policy")) {
      internal::ExpandPolicy(doc.at("policy"), base, &c.variants);
    } else if (doc.contains("policies")) {
      if (!doc.at("policies").is_array()) throw ConfigError("'policies' must be a list");
      for (const json& jp : doc.at("policies")) internal::ExpandPolicy(jp, base, &c.variants);
    }
    c.output_dir = doc.value("output_dir", std::string());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  c.Validate();
  c.resolved = ResolvedConfigJson(c);
  return c;
}

inline ScenarioConfig LoadScenarioConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseScenarioConfig(buffer.str(), std::filesystem::path(path).parent_path());
}

// --- Running ----------------------------------------------------------------

struct MetricsRow {
  std::string topology;
  std::string policy;
  int n_lines = 1;
  int n_cutoff = 0;
  double penalty_db = 0.0;
  ScenarioMetrics m;

  auto Key() const {
    return std::make_tuple(topology, policy, n_lines, n_cutoff, penalty_db, m.art_tbps);
  }
};

struct VariantPlan {
  PlannerPolicy policy;
  double art_tbps = 0.0;
  std::vector<Demand> demands;
  PlanResult plan;
};

struct ScenarioResult {
  std::vector<MetricsRow> rows;   // sorted by MetricsRow::Key
  std::vector<VariantPlan> plans;  // only when kept
};

namespace internal {

// Flexible-FSR planning does not depend on n_lines; variants that differ only
// there share one plan.
inline std::tuple<int, double, int, int> PlanKey(const PlannerPolicy& p) {
  switch (p.mode) {
    case PolicyMode::kSws:
      return {0, 0.0, 0, 0};
    case PolicyMode::kFlexibleFsr:
      return {1, p.osnr_tx_penalty_db, 0, 0};
    case PolicyMode::kFixedFsr:
      return {2, p.osnr_tx_penalty_db, p.n_lines, p.n_cutoff};
  }
  return {};
}

inline MetricsRow MakeRow(const Topology& t, const PlannerPolicy& p, ScenarioMetrics m) {
  MetricsRow r;
  r.topology = t.name();
  r.policy = PolicyModeName(p.mode);
  r.n_lines = p.mode == PolicyMode::kSws ? 1 : p.n_lines;
  r.n_cutoff = p.mode == PolicyMode::kFixedFsr ? p.n_cutoff : 0;
  r.penalty_db = p.osnr_tx_penalty_db;
  r.m = m;
  return r;
}

}  // namespace internal

// Plans every variant at every ART point. ART points run concurrently; the
// SWS baseline of each point is planned once and shared.
inline ScenarioResult RunScenario(const ScenarioConfig& config, const Topology& topology,
                                  bool keep_plans = false) {
  config.Validate();
  const std::vector<Demand> base = GenerateDemands(topology);
  const std::vector<double> arts = config.art.Points();

  const auto run_point = [&](double art) {
    ScenarioResult out;
    const std::vector<Demand> demands = ScaleDemands(base, art);
    PlannerPolicy sws_policy = config.variants.front();
    sws_policy.mode = PolicyMode::kSws;
    sws_policy.osnr_tx_penalty_db = 0.0;
    const PlanResult baseline = Plan(topology, demands, sws_policy, config.fiber);
    std::map<std::tuple<int, double, int, int>, PlanResult> cache;
    cache.emplace(internal::PlanKey(sws_policy), baseline);
    for (const PlannerPolicy& p : config.variants) {
      const auto key = internal::PlanKey(p);
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, Plan(topology, demands, p, config.fiber)).first;
      }
      out.rows.push_back(internal::MakeRow(
          topology, p, ComputeScenarioMetrics(demands, it->second, p, art, &baseline)));
      if (keep_plans) out.plans.push_back({p, art, demands, it->second});
    }
    return out;
  };

  std::vector<std::future<ScenarioResult>> jobs;
  jobs.reserve(arts.size());
  for (double art : arts) jobs.push_back(std::async(std::launch::async, run_point, art));
  ScenarioResult all;
  for (std::future<ScenarioResult>& f : jobs) {
    ScenarioResult r = f.get();
    all.rows.insert(all.rows.end(), r.rows.begin(), r.rows.end());
    for (VariantPlan& vp : r.plans) all.plans.push_back(std::move(vp));
  }
  std::stable_sort(all.rows.begin(), all.rows.end(),
                   [](const MetricsRow& a, const MetricsRow& b) { return a.Key() < b.Key(); });
  return all;
}

// --- CSV --------------------------------------------------------------------

inline constexpr const char* kMetricsHeader =
    "topology,policy,n_lines,n_cutoff,penalty_db,art_tbps,provisioned_tbps,lp_count,"
    "ws_count,up_ratio,extra_lp_ratio,fallback_count";

inline void WriteConfigComment(std::ostream& out, const nlohmann::json& resolved) {
  out << "# config: " << resolved.dump() << "\n";
}

inline void WriteMetricsCsv(std::ostream& out, const std::vector<MetricsRow>& rows,
                            const nlohmann::json& resolved) {
  WriteConfigComment(out, resolved);
  out << kMetricsHeader << "\n";
  for (const MetricsRow& r : rows) {
    out << r.topology << ',' << r.policy << ',' << r.n_lines << ',' << r.n_cutoff << ','
        << FormatNumber(r.penalty_db) << ',' << FormatNumber(r.m.art_tbps) << ','
        << FormatNumber(r.m.provisioned_tbps) << ',' << r.m.lp_count << ',' << r.m.ws_count
        << ',' << FormatNumber(r.m.up_ratio) << ','
        << (r.m.extra_lp_ratio ? FormatNumber(*r.m.extra_lp_ratio) : std::string()) << ','
        << r.m.fallback_count << "\n";
  }
}

namespace internal {

inline std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace internal

inline std::vector<MetricsRow> ReadMetricsCsv(std::istream& in, const std::string& name) {
  std::vector<MetricsRow> rows;
  std::string line;
  std::map<std::string, size_t> col;
  const std::vector<std::string> required = internal::SplitCsvLine(kMetricsHeader);
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cells = internal::SplitCsvLine(line);
    if (col.empty()) {
      for (size_t i = 0; i < cells.size(); ++i) col[cells[i]] = i;
      for (const std::string& r : required) {
        if (!col.count(r)) throw ConfigError(name + ": missing column '" + r + "'");
      }
      continue;
    }
    if (cells.size() != col.size()) {
      throw ConfigError(name + ":" + std::to_string(line_no) + ": wrong number of cells");
    }
    const auto get = [&](const char* k) -> const std::string& { return cells[col.at(k)]; };
    try {
      MetricsRow r;
      r.topology = get("topology");
      r.policy = get("policy");
      r.n_lines = static_cast<int>(ParseNumber(get("n_lines")));
      r.n_cutoff = static_cast<int>(ParseNumber(get("n_cutoff")));
      r.penalty_db = ParseNumber(get("penalty_db"));
      r.m.art_tbps = ParseNumber(get("art_tbps"));
      r.m.provisioned_tbps = ParseNumber(get("provisioned_tbps"));
      r.m.lp_count = static_cast<int>(ParseNumber(get("lp_count")));
      r.m.ws_count = static_cast<int>(ParseNumber(get("ws_count")));
      r.m.up_ratio = ParseNumber(get("up_ratio"));
      if (!get("extra_lp_ratio").empty()) {
        r.m.extra_lp_ratio = ParseNumber(get("extra_lp_ratio"));
      }
      r.m.fallback_count = static_cast<int>(ParseNumber(get("fallback_count")));
      rows.push_back(r);
    } catch (const ConfigError& e) {
      throw ConfigError(name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (col.empty()) throw ConfigError(name + ": no header row");
  return rows;
}

inline constexpr const char* kLightpathHeader =
    "topology,policy,n_lines,n_cutoff,penalty_db,art_tbps,lp_id,demand_id,src,dst,route,"
    "config,symbol_rate_gbd,modulation,config_width_slots,block_start,block_width,mws_id,"
    "line_index,data_rate_gbps,snr_total_db,required_snr_db,downgraded";

// One row per lightpath. Flexible-FSR lightpaths get the id of the MWS they
// are grouped into for the variant's n_lines.
inline void WriteLightpathCsv(std::ostream& out, const Topology& t,
                              const std::vector<VariantPlan>& plans,
                              const nlohmann::json& resolved) {
  WriteConfigComment(out, resolved);
  out << kLightpathHeader << "\n";
  for (const VariantPlan& vp : plans) {
    const MetricsRow tag = internal::MakeRow(t, vp.policy, {});
    std::map<int, std::pair<int, int>> grouped;
    if (vp.policy.mode == PolicyMode::kFlexibleFsr) {
      for (const MwsInstance& m : GroupFlexibleMws(vp.plan, vp.policy.n_lines)) {
        for (int line = 0; line < m.n_lines; ++line) {
          if (m.line_lightpaths[line] >= 0) grouped[m.line_lightpaths[line]] = {m.id, line};
        }
      }
    }
    for (const Lightpath& lp : vp.plan.lightpaths) {
      std::string route;
      for (size_t i = 0; i < lp.route.nodes.size(); ++i) {
        if (i) route += '-';
        route += std::to_string(lp.route.nodes[i]);
      }
      std::pair<int, int> src = {lp.source.mws_id, lp.source.line_index};
      if (auto it = grouped.find(lp.id); it != grouped.end()) src = it->second;
      const Demand& d = vp.demands.at(lp.demand_id);
      out << tag.topology << ',' << tag.policy << ',' << tag.n_lines << ',' << tag.n_cutoff
          << ',' << FormatNumber(tag.penalty_db) << ',' << FormatNumber(vp.art_tbps) << ','
          << lp.id << ',' << lp.demand_id << ',' << d.src << ',' << d.dst << ',' << route
          << ',' << lp.config.Label() << ',' << FormatNumber(lp.config.symbol_rate_gbd)
          << ',' << ModulationName(lp.config.modulation) << ',' << lp.config.width_slots
          << ',' << lp.block.start_slot << ',' << lp.block.width_slots << ',' << src.first
          << ',' << src.second << ',' << FormatNumber(lp.data_rate_gbps) << ','
          << FormatNumber(lp.snr.snr_total_db) << ','
          << FormatNumber(lp.config.required_snr_db) << ',' << (lp.downgraded ? 1 : 0)
          << "\n";
    }
  }
}

inline constexpr const char* kTxOsnrHeader =
    "x_variable,x_value,architecture,n_lines,osnr_tx_db,clamped";

inline void WriteTxOsnrCsv(std::ostream& out, const std::vector<TxCurvePoint>& points,
                           const nlohmann::json& resolved) {
  WriteConfigComment(out, resolved);
  out << kTxOsnrHeader << "\n";
  for (const TxCurvePoint& p : points) {
    out << SweepVariableName(p.x_variable) << ',' << FormatNumber(p.x_value) << ','
        << p.architecture << ',' << p.n_lines << ',' << FormatNumber(p.osnr_tx_db) << ','
        << (p.clamped ? 1 : 0) << "\n";
  }
}

// --- Cost -------------------------------------------------------------------

inline constexpr const char* kCostHeader =
    "s,topology,n_lines,penalty_db,max_block_cost_multiple";
inline constexpr const char* kNeverViable = "never_viable";

// 0.10, 0.15, ..., 0.60.
inline std::vector<double> DefaultLaserShares() {
  std::vector<double> s;
  for (int pct = 10; pct <= 60; pct += 5) s.push_back(pct / 100.0);
  return s;
}

enum class CostAggregate { kMin, kMax };

struct CostRow {
  double s = 0.0;
  std::string topology;
  int n_lines = 0;
  double penalty_db = 0.0;
  std::optional<double> multiple;  // empty: never viable
};

// Multiple per fully served ART point (both scenarios UP = 0) for one group.
struct CostSeries {
  std::string topology;
  int n_lines = 0;
  double penalty_db = 0.0;
  std::vector<double> art_tbps;
  std::vector<int> n_sws_lp;
  std::vector<int> n_mws_lp;
  std::vector<int> n_mws;
};

// Pairs flexible-FSR rows with the SWS baseline row of the same topology and
// ART. Points where either scenario under-provisions are left out: the cost
// comparison only holds when both carry the same traffic.
inline std::vector<CostSeries> PairCostInputs(const std::vector<MetricsRow>& baseline,
                                              const std::vector<MetricsRow>& mws) {
  std::map<std::pair<std::string, double>, const MetricsRow*> base;
  for (const MetricsRow& r : baseline) {
    if (r.policy == "sws") base[{r.topology, r.m.art_tbps}] = &r;
  }
  if (base.empty()) throw ConfigError("baseline: no sws rows");
  std::map<std::tuple<std::string, int, double>, CostSeries> groups;
  bool any = false;
  for (const MetricsRow& r : mws) {
    if (r.policy != "flexible_fsr") continue;
    any = true;
    auto it = base.find({r.topology, r.m.art_tbps});
    if (it == base.end()) {
      throw ConfigError("no baseline row for " + r.topology + " at ART " +
                        FormatNumber(r.m.art_tbps));
    }
    CostSeries& g = groups[{r.topology, r.n_lines, r.penalty_db}];
    g.topology = r.topology;
    g.n_lines = r.n_lines;
    g.penalty_db = r.penalty_db;
    if (r.m.up_ratio > 0.0 || it->second->m.up_ratio > 0.0) continue;
    g.art_tbps.push_back(r.m.art_tbps);
    g.n_sws_lp.push_back(it->second->m.lp_count);
    g.n_mws_lp.push_back(r.m.lp_count);
    g.n_mws.push_back(r.m.ws_count);
  }
  if (!any) throw ConfigError("mws: no flexible_fsr rows");
  std::vector<CostSeries> out;
  for (auto& [key, g] : groups) out.push_back(std::move(g));
  return out;
}

// kMin gives the block cost that stays viable at every fully served ART
// point; kMax the best case. Any never-viable point makes kMin never viable.
inline std::vector<CostRow> CostTable(const std::vector<CostSeries>& series,
                                      const std::vector<double>& shares,
                                      CostAggregate aggregate) {
  std::vector<CostRow> rows;
  for (const CostSeries& g : series) {
    for (double s : shares) {
      CostRow row{s, g.topology, g.n_lines, g.penalty_db, std::nullopt};
      bool never = g.art_tbps.empty();
      for (size_t i = 0; i < g.art_tbps.size(); ++i) {
        const std::optional<double> m =
            MaxMwsBlockCost(g.n_sws_lp[i], g.n_mws_lp[i], g.n_mws[i], s);
        if (!m) {
          never = never || aggregate == CostAggregate::kMin;
          continue;
        }
        if (!row.multiple) {
          row.multiple = *m;
        } else {
          row.multiple = aggregate == CostAggregate::kMin ? std::min(*row.multiple, *m)
                                                          : std::max(*row.multiple, *m);
        }
      }
      if (never) row.multiple.reset();
      rows.push_back(row);
    }
  }
  return rows;
}

inline void WriteCostCsv(std::ostream& out, const std::vector<CostRow>& rows,
                         const nlohmann::json& resolved) {
  WriteConfigComment(out, resolved);
  out << kCostHeader << "\n";
  for (const CostRow& r : rows) {
    out << FormatNumber(r.s) << ',' << r.topology << ',' << r.n_lines << ','
        << FormatNumber(r.penalty_db) << ','
        << (r.multiple ? FormatNumber(*r.multiple) : std::string(kNeverViable)) << "\n";
  }
}

}  // namespace mwsplan

#endif  // MWSPLAN_SCENARIO_HPP_
