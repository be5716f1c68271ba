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

// Planning outcome metrics: underprovisioning, lightpath and wavelength-source
// counts, and the cost-parity bound on an MWS block.

#ifndef MWSPLAN_METRICS_HPP_
#define MWSPLAN_METRICS_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mwsplan/netgraph.hpp"
#include "mwsplan/planner.hpp"

namespace mwsplan {

// Shortfall summed over under-served demands only, over total requested.
// Overshoot on one demand never offsets a shortfall on another.
inline double Underprovisioning(std::span<const double> requested_gbps,
                                std::span<const double> provisioned_gbps) {
  if (requested_gbps.size() != provisioned_gbps.size()) {
    throw std::invalid_argument("requested/provisioned size mismatch");
  }
  double total = 0.0;
  double shortfall = 0.0;
  for (size_t i = 0; i < requested_gbps.size(); ++i) {
    total += requested_gbps[i];
    const double gap = requested_gbps[i] - provisioned_gbps[i];
    if (gap > 0.0) shortfall += gap;
  }
  if (!(total > 0.0)) throw std::domain_error("total requested traffic is zero");
  return shortfall / total;
}

inline double Underprovisioning(const std::vector<Demand>& demands, const PlanResult& plan) {
  std::vector<double> requested;
  requested.reserve(demands.size());
  for (const Demand& d : demands) requested.push_back(d.requested_gbps);
  return Underprovisioning(requested, plan.provisioned_gbps);
}

inline int WavelengthSourceCount(const PlanResult& plan, const PlannerPolicy& policy) {
  switch (policy.mode) {
    case PolicyMode::kSws:
      return static_cast<int>(plan.lightpaths.size());
    case PolicyMode::kFixedFsr:
      return static_cast<int>(plan.mws_instances.size()) + plan.SwsLightpathCount();
    case PolicyMode::kFlexibleFsr:
      return static_cast<int>(GroupFlexibleMws(plan, policy.n_lines).size());
  }
  return 0;
}

// Largest MWS block cost, in units of the SWS laser cost, at which the MWS
// deployment costs no more than the SWS one. Transponder cost is 1 per
// lightpath with a share `laser_share` spent on the laser:
//   n_sws_lp = n_mws_lp * (1 - s) + n_mws * block  =>  block / s.
// Empty when no positive block cost breaks even ("never viable").
inline std::optional<double> MaxMwsBlockCost(double n_sws_lp, double n_mws_lp,
                                             double n_mws, double laser_share) {
  if (!(laser_share > 0.0 && laser_share < 1.0)) {
    throw std::invalid_argument("laser share must lie in (0, 1)");
  }
  if (!(n_mws > 0.0)) return std::nullopt;
  const double block = (n_sws_lp - n_mws_lp * (1.0 - laser_share)) / n_mws;
  if (!(block > 0.0)) return std::nullopt;
  return block / laser_share;
}

struct ScenarioMetrics {
  double art_tbps = 0.0;
  double provisioned_tbps = 0.0;
  int lp_count = 0;
  int ws_count = 0;
  double up_ratio = 0.0;
  std::optional<double> extra_lp_ratio;  // vs the SWS baseline, when given
  int fallback_count = 0;
};

inline ScenarioMetrics ComputeScenarioMetrics(const std::vector<Demand>& demands,
                                              const PlanResult& plan,
                                              const PlannerPolicy& policy, double art_tbps,
                                              const PlanResult* baseline = nullptr) {
  ScenarioMetrics m;
  m.art_tbps = art_tbps;
  double gbps = 0.0;
  for (double p : plan.provisioned_gbps) gbps += p;
  m.provisioned_tbps = gbps / 1000.0;
  m.lp_count = static_cast<int>(plan.lightpaths.size());
  m.ws_count = WavelengthSourceCount(plan, policy);
  m.up_ratio = Underprovisioning(demands, plan);
  m.fallback_count = static_cast<int>(plan.fallback_demands.size());
  if (baseline) {
    const double base = static_cast<double>(baseline->lightpaths.size());
    m.extra_lp_ratio = base > 0.0 ? (m.lp_count - base) / base : 0.0;
  }
  return m;
}

}  // namespace mwsplan

#endif  // MWSPLAN_METRICS_HPP_
