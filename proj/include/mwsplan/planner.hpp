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

// Routing, configuration and spectrum assignment (RCSA). Demands are served
// one after another, largest first, under one of three policies:
//
//   sws           every lightpath has its own laser;
//   fixed_fsr     demands that would need at least n_cutoff SWS lightpaths are
//                 served from fixed-FSR MWSs whose lines co-propagate in one
//                 reserved block; the rest use SWSs;
//   flexible_fsr  like sws, but with the MWS transmit OSNR penalty. Lines are
//                 grouped into MWSs per terminal node afterwards.
//
// Candidates are picked on the linear SNR (transmitter + ASE) and then checked
// against the full SNR including nonlinear interference; failing candidates
// are downgraded inside the block they were given.

#ifndef MWSPLAN_PLANNER_HPP_
#define MWSPLAN_PLANNER_HPP_

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwsplan/netgraph.hpp"
#include "mwsplan/phys.hpp"
#include "mwsplan/spectrum.hpp"
#include "mwsplan/txmodel.hpp"

namespace mwsplan {

enum class PolicyMode { kSws, kFixedFsr, kFlexibleFsr };

inline std::string PolicyModeName(PolicyMode m) {
  switch (m) {
    case PolicyMode::kSws: return "sws";
    case PolicyMode::kFixedFsr: return "fixed_fsr";
    case PolicyMode::kFlexibleFsr: return "flexible_fsr";
  }
  return "?";
}

// How the last lightpath of a demand is sized once the remainder fits into
// one lightpath.
enum class FinalLpRule {
  kSmallestCovering,  // cheapest feasible config that still covers the remainder
  kHighestRate,       // always the highest feasible config
};

// Order in which (route, config) candidates are tried for one lightpath.
enum class RouteSearch {
  // Route by route; the first route admitting any config wins.
  kFirstRoute,
  // The target config on each of the k routes first, then narrower configs
  // route by route.
  kTargetFirst,
};

struct PlannerPolicy {
  PolicyMode mode = PolicyMode::kSws;
  int n_lines = 4;
  int n_cutoff = 1;
  double osnr_tx_penalty_db = 0.0;
  int k = 3;
  double base_osnr_tx_db = 36.0;
  FinalLpRule final_lp_rule = FinalLpRule::kSmallestCovering;
  RouteSearch route_search = RouteSearch::kFirstRoute;

  static PlannerPolicy Sws() { return {}; }
  static PlannerPolicy FlexibleFsr(double penalty_db, int n_lines = 4) {
    PlannerPolicy p;
    p.mode = PolicyMode::kFlexibleFsr;
    p.osnr_tx_penalty_db = penalty_db;
    p.n_lines = n_lines;
    return p;
  }
  static PlannerPolicy FixedFsr(int n_lines, int n_cutoff, double penalty_db = 1.0) {
    PlannerPolicy p;
    p.mode = PolicyMode::kFixedFsr;
    p.n_lines = n_lines;
    p.n_cutoff = n_cutoff;
    p.osnr_tx_penalty_db = penalty_db;
    return p;
  }

  double MwsOsnrTxDb() const { return base_osnr_tx_db - osnr_tx_penalty_db; }

  void Validate() const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (!(osnr_tx_penalty_db >= 0.0)) throw std::invalid_argument("penalty must be >= 0");
    if (mode != PolicyMode::kSws && n_lines < 1) {
      throw std::invalid_argument("n_lines must be >= 1");
    }
    if (mode == PolicyMode::kFixedFsr && (n_cutoff < 1 || n_cutoff > n_lines)) {
      throw std::invalid_argument("n_cutoff must lie in [1, n_lines]");
    }
  }
};

struct LightpathSource {
  int mws_id = -1;  // -1: single-wavelength source
  int line_index = -1;

  bool IsMws() const { return mws_id >= 0; }
  bool operator==(const LightpathSource&) const = default;
};

struct Lightpath {
  int id = 0;
  int demand_id = 0;
  RoutePath route;
  TransceiverConfig config;
  // Allocated slots. Wider than config.width_slots after a downgrade.
  SlotBlock block;
  LightpathSource source;
  SnrBreakdown snr;
  double data_rate_gbps = 0.0;
  bool downgraded = false;

  bool operator==(const Lightpath&) const = default;
};

struct MwsInstance {
  int id = 0;
  int terminal_node = 0;
  FsrMode fsr_mode = FsrMode::kFixed;
  int n_lines = 0;
  // Lightpath id per line; -1 while the line is reserved but inactive.
  std::vector<int> line_lightpaths;
  // Fixed-FSR only.
  int demand_id = -1;
  RoutePath route;
  std::optional<TransceiverConfig> config;
  SlotBlock block;

  int ActiveLines() const {
    return static_cast<int>(std::count_if(line_lightpaths.begin(), line_lightpaths.end(),
                                          [](int id) { return id >= 0; }));
  }
  bool operator==(const MwsInstance&) const = default;
};

struct FailureRecord {
  int demand_id = 0;
  double shortfall_gbps = 0.0;
  std::string reason;

  bool operator==(const FailureRecord&) const = default;
};

struct PlanResult {
  std::vector<Lightpath> lightpaths;
  std::vector<MwsInstance> mws_instances;
  std::vector<double> provisioned_gbps;  // indexed by demand id
  std::vector<FailureRecord> failures;
  std::vector<int> fallback_demands;  // fixed-FSR demands served by SWS fallback
  SpectrumGrid grid;

  int SwsLightpathCount() const {
    return static_cast<int>(std::count_if(lightpaths.begin(), lightpaths.end(),
                                          [](const Lightpath& lp) { return !lp.source.IsMws(); }));
  }
  bool operator==(const PlanResult&) const = default;
};

inline constexpr int kInfeasibleLpCount = INT_MAX;
inline constexpr double kRateEpsilonGbps = 1e-6;

// Steps down the ladder below `current`, keeping only configs that fit in
// the allocated block, until one clears the full-SNR threshold.
template <typename SnrFn>
std::optional<TransceiverConfig> Downgrade(const TransceiverConfig& current,
                                           int block_width_slots, SnrFn&& full_snr_of) {
  const std::vector<TransceiverConfig>& ladder = ConfigLadder();
  auto it = std::find(ladder.begin(), ladder.end(), current);
  if (it == ladder.end()) throw std::invalid_argument("config is not on the ladder");
  if (current.required_snr_db <= full_snr_of(current)) return current;
  for (++it; it != ladder.end(); ++it) {
    if (it->width_slots > block_width_slots) continue;
    if (it->required_snr_db <= full_snr_of(*it)) return *it;
  }
  return std::nullopt;
}

// Config a placement aims for given what the demand still needs. `feasible`
// is in ladder order and non-empty.
inline TransceiverConfig ChooseTargetConfig(const std::vector<TransceiverConfig>& feasible,
                                            double remaining_gbps, FinalLpRule rule) {
  if (rule == FinalLpRule::kHighestRate ||
      remaining_gbps > feasible.front().data_rate_gbps) {
    return feasible.front();
  }
  const TransceiverConfig* best = &feasible.front();
  for (const TransceiverConfig& c : feasible) {
    if (c.data_rate_gbps + kRateEpsilonGbps < remaining_gbps) continue;
    if (c.data_rate_gbps < best->data_rate_gbps ||
        (c.data_rate_gbps == best->data_rate_gbps && c.width_slots < best->width_slots)) {
      best = &c;
    }
  }
  return *best;
}

struct RouteOption {
  RoutePath path;
  RouteBudget budget;
};

class RcsaPlanner {
 public:
  RcsaPlanner(const Topology& topology, std::vector<Demand> demands,
              PlannerPolicy policy, FiberParams fiber = {},
              int slots_per_link = kSlotsPerLink)
      : topology_(&topology),
        demands_(std::move(demands)),
        policy_(policy),
        fiber_(fiber) {
    policy_.Validate();
    fiber_.Validate();
    result_.grid = SpectrumGrid(topology.num_links(), slots_per_link);
    result_.provisioned_gbps.assign(demands_.size(), 0.0);
    routes_.resize(demands_.size());
    for (size_t i = 0; i < demands_.size(); ++i) {
      const Demand& d = demands_[i];
      if (d.id != static_cast<int>(i)) {
        throw std::invalid_argument("demand ids must be dense and in order");
      }
      if (d.src == d.dst) throw std::invalid_argument("demand with src == dst");
      for (RoutePath& p : KShortestPaths(topology, d.src, d.dst, policy_.k)) {
        RouteBudget b = RouteBudget::For(p, fiber_);
        routes_[i].push_back({std::move(p), b});
      }
    }
  }

  const PlannerPolicy& policy() const { return policy_; }
  const std::vector<Demand>& demands() const { return demands_; }
  const PlanResult& result() const { return result_; }
  const std::vector<RouteOption>& routes(int demand_id) const { return routes_.at(demand_id); }

  // Serves every demand, largest request first (ties by id).
  PlanResult Run() {
    std::vector<int> order(demands_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return demands_[a].requested_gbps > demands_[b].requested_gbps;
    });
    for (int i : order) {
      const Demand& d = demands_[i];
      switch (policy_.mode) {
        case PolicyMode::kSws:
          PlaceDemandSws(d);
          break;
        case PolicyMode::kFlexibleFsr:
          PlaceDemandFlexibleMws(d);
          break;
        case PolicyMode::kFixedFsr:
          // Any demand needs at least one lightpath, so n_cutoff = 1 skips the estimate.
          if (policy_.n_cutoff == 1 || EstimateSwsLpCount(d) >= policy_.n_cutoff) {
            PlaceDemandFixedMws(d);
          } else {
            PlaceDemandSws(d);
          }
          break;
      }
    }
    return result_;
  }

  double Remaining(const Demand& d) const {
    return d.requested_gbps - result_.provisioned_gbps.at(d.id);
  }

  // Places SWS lightpaths until the demand is covered or nothing fits.
  // Returns the number of lightpaths added.
  int PlaceDemandSws(const Demand& d) {
    return PlaceSingleLines(d, policy_.base_osnr_tx_db);
  }

  // Flexible-FSR lines behave like SWSs apart from the transmit penalty.
  int PlaceDemandFlexibleMws(const Demand& d) {
    return PlaceSingleLines(d, policy_.MwsOsnrTxDb());
  }

  // SWS lightpaths this demand would need on the current spectrum state, or
  // kInfeasibleLpCount when it cannot be fully served. Nothing is committed.
  int EstimateSwsLpCount(const Demand& d) const {
    SpectrumGrid scratch = result_.grid;
    double remaining = Remaining(d);
    int count = 0;
    while (remaining > kRateEpsilonGbps) {
      Shortfall why;
      const std::optional<Placement> p =
          FindPlacement(scratch, d.id, remaining, policy_.base_osnr_tx_db, 1, &why);
      if (!p) return kInfeasibleLpCount;
      scratch.Allocate(routes_[d.id][p->route_index].path.links, p->block, -1);
      remaining -= p->config.data_rate_gbps;
      ++count;
    }
    return count;
  }

  // Serves the demand from fixed-FSR MWSs bound to it, one reserved block of
  // n_lines adjacent lines per MWS. Falls back to SWSs when no block fits.
  // Returns the number of lightpaths added.
  int PlaceDemandFixedMws(const Demand& d) {
    const double osnr = policy_.MwsOsnrTxDb();
    int added = 0;
    while (Remaining(d) > kRateEpsilonGbps) {
      Shortfall why;
      const std::optional<Placement> p =
          FindPlacement(result_.grid, d.id, Remaining(d), osnr, policy_.n_lines, &why);
      if (!p) {
        result_.fallback_demands.push_back(d.id);
        return added + PlaceDemandSws(d);
      }
      const RouteOption& route = routes_[d.id][p->route_index];
      MwsInstance mws;
      mws.id = static_cast<int>(result_.mws_instances.size());
      mws.terminal_node = d.src;
      mws.fsr_mode = FsrMode::kFixed;
      mws.n_lines = policy_.n_lines;
      mws.line_lightpaths.assign(policy_.n_lines, -1);
      mws.demand_id = d.id;
      mws.route = route.path;
      mws.config = p->config;
      const std::optional<SlotBlock> block = result_.grid.ReserveFixedFsr(
          route.path.links, policy_.n_lines, p->candidate.width_slots, mws.id);
      if (!block || *block != p->block) {
        throw std::logic_error("fixed-FSR reservation diverged from the search");
      }
      mws.block = *block;
      for (int line = 0; line < policy_.n_lines && Remaining(d) > kRateEpsilonGbps; ++line) {
        const int lp_id = static_cast<int>(result_.lightpaths.size());
        const SlotBlock line_block = result_.grid.ActivateReservedLine(mws.id, line, lp_id);
        Commit(d, route, *p, line_block, {mws.id, line});
        mws.line_lightpaths[line] = lp_id;
        ++added;
      }
      result_.mws_instances.push_back(std::move(mws));
    }
    return added;
  }

 private:
  enum class Shortfall { kNone, kNoRoute, kNoConfig, kNoSpectrum, kSnr };

  static const char* ShortfallName(Shortfall s) {
    switch (s) {
      case Shortfall::kNone: return "none";
      case Shortfall::kNoRoute: return "no_route";
      case Shortfall::kNoConfig: return "no_feasible_config";
      case Shortfall::kNoSpectrum: return "no_spectrum";
      case Shortfall::kSnr: return "snr_after_downgrade";
    }
    return "?";
  }

  struct Placement {
    int route_index = 0;
    TransceiverConfig candidate;  // chosen on the linear SNR; sets the width
    TransceiverConfig config;     // after full-SNR verification
    SlotBlock block;              // whole block (all lines for fixed-FSR)
    SnrBreakdown snr;
    bool downgraded = false;
  };

  // Picks route, config and block for one lightpath (or one fixed-FSR block
  // of `lines` lines). Candidates come from the linear SNR; the target config
  // is the one ChooseTargetConfig aims for, followed on each route by the
  // other linear-feasible configs in ladder order. See RouteSearch for the
  // order in which routes are visited.
  std::optional<Placement> FindPlacement(const SpectrumGrid& grid, int demand_id,
                                         double remaining, double osnr_tx_db, int lines,
                                         Shortfall* why) const {
    const std::vector<RouteOption>& options = routes_[demand_id];
    struct RouteCandidates {
      std::vector<TransceiverConfig> order;  // target first
      int min_failed_width = INT_MAX;
    };
    std::vector<RouteCandidates> per_route(options.size());
    bool any_config = false;
    bool any_spectrum = false;
    for (size_t ri = 0; ri < options.size(); ++ri) {
      const std::vector<TransceiverConfig> linear =
          FilterFeasible([&](const TransceiverConfig& c) {
            return options[ri]
                .budget.Evaluate(c.symbol_rate_gbd, osnr_tx_db, SnrMode::kLinearOnly)
                .snr_total_db;
          });
      if (linear.empty()) continue;
      any_config = true;
      const TransceiverConfig target =
          ChooseTargetConfig(linear, remaining, policy_.final_lp_rule);
      per_route[ri].order.push_back(target);
      for (const TransceiverConfig& c : linear) {
        if (!(c == target)) per_route[ri].order.push_back(c);
      }
    }
    // Tries one candidate; records spectrum failures so wider configs are
    // skipped afterwards on that route.
    const auto attempt = [&](size_t ri, const TransceiverConfig& candidate)
        -> std::optional<Placement> {
      RouteCandidates& rc = per_route[ri];
      if (candidate.width_slots >= rc.min_failed_width) return std::nullopt;
      const RouteOption& route = options[ri];
      const std::optional<SlotBlock> block =
          grid.FirstFit(route.path.links, lines * candidate.width_slots);
      if (!block) {
        rc.min_failed_width = candidate.width_slots;
        return std::nullopt;
      }
      any_spectrum = true;
      const std::optional<TransceiverConfig> config =
          Downgrade(candidate, candidate.width_slots, [&](const TransceiverConfig& c) {
            return route.budget.Evaluate(c.symbol_rate_gbd, osnr_tx_db, SnrMode::kFull)
                .snr_total_db;
          });
      if (!config) return std::nullopt;
      Placement p;
      p.route_index = static_cast<int>(ri);
      p.candidate = candidate;
      p.config = *config;
      p.block = *block;
      p.snr = route.budget.Evaluate(config->symbol_rate_gbd, osnr_tx_db, SnrMode::kFull);
      p.downgraded = !(*config == candidate);
      return p;
    };
    if (policy_.route_search == RouteSearch::kTargetFirst) {
      for (size_t ri = 0; ri < options.size(); ++ri) {
        if (per_route[ri].order.empty()) continue;
        if (std::optional<Placement> p = attempt(ri, per_route[ri].order.front())) {
          if (why) *why = Shortfall::kNone;
          return p;
        }
      }
    }
    for (size_t ri = 0; ri < options.size(); ++ri) {
      for (const TransceiverConfig& candidate : per_route[ri].order) {
        if (std::optional<Placement> p = attempt(ri, candidate)) {
          if (why) *why = Shortfall::kNone;
          return p;
        }
      }
    }
    if (why) {
      if (options.empty()) {
        *why = Shortfall::kNoRoute;
      } else if (!any_config) {
        *why = Shortfall::kNoConfig;
      } else if (!any_spectrum) {
        *why = Shortfall::kNoSpectrum;
      } else {
        *why = Shortfall::kSnr;
      }
    }
    return std::nullopt;
  }

  int PlaceSingleLines(const Demand& d, double osnr_tx_db) {
    int added = 0;
    Shortfall why = Shortfall::kNone;
    while (Remaining(d) > kRateEpsilonGbps) {
      const std::optional<Placement> p =
          FindPlacement(result_.grid, d.id, Remaining(d), osnr_tx_db, 1, &why);
      if (!p) break;
      const RouteOption& route = routes_[d.id][p->route_index];
      const int lp_id = static_cast<int>(result_.lightpaths.size());
      result_.grid.Allocate(route.path.links, p->block, lp_id);
      Commit(d, route, *p, p->block, {});
      ++added;
    }
    if (Remaining(d) > kRateEpsilonGbps) {
      result_.failures.push_back({d.id, Remaining(d), ShortfallName(why)});
    }
    return added;
  }

  void Commit(const Demand& d, const RouteOption& route, const Placement& p,
              SlotBlock block, LightpathSource source) {
    Lightpath lp;
    lp.id = static_cast<int>(result_.lightpaths.size());
    lp.demand_id = d.id;
    lp.route = route.path;
    lp.config = p.config;
    lp.block = block;
    lp.source = source;
    lp.snr = p.snr;
    lp.data_rate_gbps = p.config.data_rate_gbps;
    lp.downgraded = p.downgraded;
    result_.provisioned_gbps[d.id] += lp.data_rate_gbps;
    result_.lightpaths.push_back(std::move(lp));
  }

  const Topology* topology_;
  std::vector<Demand> demands_;
  PlannerPolicy policy_;
  FiberParams fiber_;
  std::vector<std::vector<RouteOption>> routes_;
  PlanResult result_;
};

inline PlanResult Plan(const Topology& topology, const std::vector<Demand>& demands,
                       const PlannerPolicy& policy, const FiberParams& fiber = {},
                       int slots_per_link = kSlotsPerLink) {
  return RcsaPlanner(topology, demands, policy, fiber, slots_per_link).Run();
}

// Packs the lightpaths leaving each node into MWSs of n_lines lines. Node
// count: ceil(lightpaths at node / n_lines).
inline std::vector<MwsInstance> GroupFlexibleMws(const PlanResult& plan, int n_lines) {
  if (n_lines < 1) throw std::invalid_argument("n_lines must be >= 1");
  std::map<int, std::vector<int>> by_node;
  for (const Lightpath& lp : plan.lightpaths) {
    by_node[lp.route.nodes.front()].push_back(lp.id);
  }
  std::vector<MwsInstance> out;
  for (const auto& [node, ids] : by_node) {
    for (size_t first = 0; first < ids.size(); first += n_lines) {
      MwsInstance m;
      m.id = static_cast<int>(out.size());
      m.terminal_node = node;
      m.fsr_mode = FsrMode::kFlexible;
      m.n_lines = n_lines;
      m.line_lightpaths.assign(n_lines, -1);
      for (size_t j = first; j < std::min(ids.size(), first + n_lines); ++j) {
        m.line_lightpaths[j - first] = ids[j];
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

// Consistency audit of a finished plan; returns one message per violation.
inline std::vector<std::string> AuditPlan(const std::vector<Demand>& demands,
                                          const PlanResult& plan) {
  std::vector<std::string> errors;
  const SpectrumGrid& grid = plan.grid;
  for (int l = 0; l < grid.num_links(); ++l) {
    const SlotCounts c = grid.Counts(l);
    if (c.free + c.used + c.reserved != grid.slots_per_link()) {
      errors.push_back("link " + std::to_string(l) + ": slot counts do not add up");
    }
  }
  // Every non-free slot must be claimed exactly once by a lightpath or an
  // inactive fixed-FSR line.
  std::vector<int> claims(static_cast<size_t>(grid.num_links()) * grid.slots_per_link(), 0);
  const auto claim = [&](int link, SlotBlock b, SlotState state, int owner,
                         const std::string& who) {
    for (int s = b.start_slot; s < b.end(); ++s) {
      if (++claims[static_cast<size_t>(link) * grid.slots_per_link() + s] > 1) {
        errors.push_back(who + ": slot " + std::to_string(s) + " on link " +
                         std::to_string(link) + " double-booked");
      }
      const Slot& slot = grid.at(link, s);
      if (slot.state != state || slot.owner != owner) {
        errors.push_back(who + ": grid disagrees at link " + std::to_string(link) +
                         " slot " + std::to_string(s));
      }
    }
  };
  std::vector<double> provisioned(demands.size(), 0.0);
  for (const Lightpath& lp : plan.lightpaths) {
    const std::string who = "lightpath " + std::to_string(lp.id);
    for (int l : lp.route.links) claim(l, lp.block, SlotState::kUsed, lp.id, who);
    if (lp.snr.snr_total_db < lp.config.required_snr_db) {
      errors.push_back(who + ": SNR below threshold");
    }
    if (lp.block.width_slots < lp.config.width_slots) {
      errors.push_back(who + ": block narrower than its config");
    }
    provisioned.at(lp.demand_id) += lp.data_rate_gbps;
  }
  for (const MwsInstance& m : plan.mws_instances) {
    if (m.fsr_mode != FsrMode::kFixed) continue;
    const std::string who = "mws " + std::to_string(m.id);
    const int per_line = m.block.width_slots / m.n_lines;
    if (per_line * m.n_lines != m.block.width_slots) {
      errors.push_back(who + ": lines do not tile the block");
    }
    for (int line = 0; line < m.n_lines; ++line) {
      const SlotBlock b{m.block.start_slot + line * per_line, per_line};
      const int lp_id = m.line_lightpaths[line];
      if (lp_id < 0) {
        for (int l : m.route.links) claim(l, b, SlotState::kReserved, m.id, who);
        continue;
      }
      const Lightpath& lp = plan.lightpaths.at(lp_id);
      if (lp.demand_id != m.demand_id || !(lp.route == m.route) ||
          !(lp.config == *m.config) || !(lp.block == b)) {
        errors.push_back(who + ": line " + std::to_string(line) +
                         " breaks the shared route/config/demand/slot layout");
      }
    }
  }
  for (int l = 0; l < grid.num_links(); ++l) {
    for (int s = 0; s < grid.slots_per_link(); ++s) {
      const bool busy = grid.at(l, s).state != SlotState::kFree;
      const bool claimed = claims[static_cast<size_t>(l) * grid.slots_per_link() + s] > 0;
      if (busy != claimed) {
        errors.push_back("link " + std::to_string(l) + " slot " + std::to_string(s) +
                         ": occupancy without owner record");
      }
    }
  }
  for (size_t i = 0; i < demands.size() && i < plan.provisioned_gbps.size(); ++i) {
    if (std::abs(provisioned[i] - plan.provisioned_gbps[i]) > 1e-6) {
      errors.push_back("demand " + std::to_string(i) + ": provisioned total mismatch");
    }
  }
  return errors;
}

}  // namespace mwsplan

#endif  // MWSPLAN_PLANNER_HPP_
