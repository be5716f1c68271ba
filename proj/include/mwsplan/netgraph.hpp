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

// Network topology, topology-file ingestion, k-shortest-path routing and
// traffic-matrix generation.

#ifndef MWSPLAN_NETGRAPH_HPP_
#define MWSPLAN_NETGRAPH_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace mwsplan {

inline constexpr double kSpanLengthKm = 80.0;
inline constexpr double kRoutingFactor = 1.2;

struct Node {
  int id = 0;
  std::string name;
  double latitude = 0.0;
  double longitude = 0.0;
  double traffic_weight = 1.0;

  bool operator==(const Node&) const = default;
};

inline int SpanCount(double length_km, double span_length_km = kSpanLengthKm) {
  return static_cast<int>(std::ceil(length_km / span_length_km - 1e-12));
}

struct Link {
  int a = 0;
  int b = 0;
  double length_km = 0.0;
  int span_count = 0;

  int Other(int node) const { return node == a ? b : a; }
  bool operator==(const Link&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Great-circle distance on a spherical Earth.
inline double GreatCircleKm(double lat1, double lon1, double lat2, double lon2) {
  constexpr double kEarthRadiusKm = 6371.0;
  constexpr double kDeg = std::numbers::pi / 180.0;
  const double dlat = (lat2 - lat1) * kDeg;
  const double dlon = (lon2 - lon1) * kDeg;
  const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1 * kDeg) * std::cos(lat2 * kDeg) *
                       std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

// Immutable undirected mesh. Construction validates every invariant.
class Topology {
 public:
  Topology() = default;
  Topology(std::string name, std::vector<Node> nodes, std::vector<Link> links)
      : name_(std::move(name)), nodes_(std::move(nodes)), links_(std::move(links)) {
    const int n = static_cast<int>(nodes_.size());
    if (n < 2) throw ParseError("topology needs at least two nodes");
    for (int i = 0; i < n; ++i) {
      if (nodes_[i].id != i) {
        throw ParseError("nodes[" + std::to_string(i) +
                         "]: ids must be unique and dense from 0");
      }
      if (!(nodes_[i].traffic_weight >= 0.0)) {
        throw ParseError("nodes[" + std::to_string(i) + "]: negative weight");
      }
    }
    adjacency_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (int l = 0; l < static_cast<int>(links_.size()); ++l) {
      Link& link = links_[l];
      const std::string where = "links[" + std::to_string(l) + "]: ";
      if (link.a < 0 || link.a >= n || link.b < 0 || link.b >= n) {
        throw ParseError(where + "unknown endpoint");
      }
      if (link.a == link.b) throw ParseError(where + "self loop");
      if (!(link.length_km > 0.0)) throw ParseError(where + "length must be > 0");
      if (!seen.insert(std::minmax(link.a, link.b)).second) {
        throw ParseError(where + "parallel link");
      }
      link.span_count = SpanCount(link.length_km);
      adjacency_[link.a].push_back({link.b, l});
      adjacency_[link.b].push_back({link.a, l});
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
    if (!Connected()) throw ParseError("topology is not connected");
  }

  const std::string& name() const { return name_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_links() const { return static_cast<int>(links_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  const Node& node(int id) const { return nodes_.at(id); }
  const Link& link(int id) const { return links_.at(id); }
  // (neighbor, link id), ascending by neighbor id.
  const std::vector<std::pair<int, int>>& neighbors(int node) const {
    return adjacency_.at(node);
  }

  std::optional<int> LinkBetween(int u, int v) const {
    for (const auto& [w, l] : adjacency_.at(u)) {
      if (w == v) return l;
    }
    return std::nullopt;
  }

 private:
  bool Connected() const {
    std::vector<bool> visited(nodes_.size(), false);
    std::vector<int> stack = {0};
    visited[0] = true;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [v, l] : adjacency_[u]) {
        if (!visited[v]) {
          visited[v] = true;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == num_nodes();
  }

  std::string name_;
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// Parses the JSON topology document:
//   {"name"?, "nodes": [{id, name, lat, lon, weight?}], "links": [{a, b, length_km?}]}
// Missing link lengths are derived as great-circle distance x 1.2.
inline Topology ParseTopology(const std::string& document) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("topology: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("links") ||
      !doc["nodes"].is_array() || !doc["links"].is_array()) {
    throw ParseError("topology: expected object with 'nodes' and 'links' arrays");
  }
  std::vector<Node> nodes;
  try {
    for (size_t i = 0; i < doc["nodes"].size(); ++i) {
      const json& jn = doc["nodes"][i];
      Node n;
      n.id = jn.at("id").get<int>();
      n.name = jn.value("name", "n" + std::to_string(n.id));
      n.latitude = jn.value("lat", 0.0);
      n.longitude = jn.value("lon", 0.0);
      n.traffic_weight = jn.value("weight", 1.0);
      nodes.push_back(std::move(n));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("topology nodes: ") + e.what());
  }
  std::vector<Node> by_id = nodes;
  std::sort(by_id.begin(), by_id.end(),
            [](const Node& x, const Node& y) { return x.id < y.id; });
  for (size_t i = 0; i < by_id.size(); ++i) {
    if (by_id[i].id != static_cast<int>(i)) {
      throw ParseError("nodes: ids must be unique and dense from 0 (offending id " +
                       std::to_string(by_id[i].id) + ")");
    }
  }
  std::vector<Link> links;
  try {
    for (size_t i = 0; i < doc["links"].size(); ++i) {
      const json& jl = doc["links"][i];
      Link l;
      l.a = jl.at("a").get<int>();
      l.b = jl.at("b").get<int>();
      if (jl.contains("length_km")) {
        l.length_km = jl["length_km"].get<double>();
      } else if (l.a >= 0 && l.b >= 0 && l.a < static_cast<int>(by_id.size()) &&
                 l.b < static_cast<int>(by_id.size())) {
        const Node& u = by_id[l.a];
        const Node& v = by_id[l.b];
        l.length_km = kRoutingFactor *
                      GreatCircleKm(u.latitude, u.longitude, v.latitude, v.longitude);
      }
      links.push_back(l);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("topology links: ") + e.what());
  }
  return Topology(doc.value("name", std::string("topology")), std::move(by_id),
                  std::move(links));
}

inline Topology LoadTopology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open topology file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseTopology(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// --- Routing ----------------------------------------------------------------

struct RoutePath {
  std::vector<int> nodes;
  std::vector<int> links;
  std::vector<double> link_lengths_km;
  double total_length_km = 0.0;
  int total_span_count = 0;

  bool operator==(const RoutePath&) const = default;
};

namespace internal {

// Route lengths are compared in integer millimetres so that ties are exact.
inline std::int64_t LengthUnits(double km) {
  return static_cast<std::int64_t>(std::llround(km * 1e6));
}

struct Candidate {
  std::int64_t length;
  std::vector<int> nodes;

  bool operator<(const Candidate& o) const {
    if (length != o.length) return length < o.length;
    return nodes < o.nodes;
  }
  bool operator==(const Candidate&) const = default;
};

// Lexicographically smallest among the shortest src->dst paths, avoiding the
// given nodes and links.
inline std::optional<Candidate> LexMinShortestPath(
    const Topology& t, int src, int dst, const std::vector<bool>& node_blocked,
    const std::vector<bool>& link_blocked) {
  constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();
  const int n = t.num_nodes();
  std::vector<std::int64_t> dist(n, kUnreached);
  using Entry = std::pair<std::int64_t, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  dist[dst] = 0;
  pq.push({0, dst});
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (const auto& [v, l] : t.neighbors(u)) {
      if (link_blocked[l] || node_blocked[v]) continue;
      const std::int64_t nd = d + LengthUnits(t.link(l).length_km);
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  if (dist[src] == kUnreached || node_blocked[src]) return std::nullopt;
  Candidate c{dist[src], {src}};
  int u = src;
  while (u != dst) {
    for (const auto& [v, l] : t.neighbors(u)) {  // ascending neighbor id
      if (link_blocked[l] || node_blocked[v] || dist[v] == kUnreached) continue;
      if (LengthUnits(t.link(l).length_km) + dist[v] == dist[u]) {
        u = v;
        break;
      }
    }
    c.nodes.push_back(u);
  }
  return c;
}

}  // namespace internal

inline RoutePath MakeRoutePath(const Topology& t, const std::vector<int>& nodes) {
  RoutePath p;
  p.nodes = nodes;
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    const std::optional<int> l = t.LinkBetween(nodes[i], nodes[i + 1]);
    if (!l) throw std::invalid_argument("nodes are not adjacent");
    p.links.push_back(*l);
    p.link_lengths_km.push_back(t.link(*l).length_km);
    p.total_length_km += t.link(*l).length_km;
    p.total_span_count += t.link(*l).span_count;
  }
  return p;
}

// Yen's loopless k shortest paths with Dijkstra spur searches. Ties in length
// are broken by the lexicographic node-id sequence, so the result equals the
// first k entries of all simple paths sorted by (length, node sequence).
inline std::vector<RoutePath> KShortestPaths(const Topology& t, int src, int dst,
                                             int k) {
  if (src == dst) throw std::invalid_argument("k shortest paths needs src != dst");
  if (src < 0 || dst < 0 || src >= t.num_nodes() || dst >= t.num_nodes()) {
    throw std::out_of_range("unknown node");
  }
  std::vector<RoutePath> out;
  if (k <= 0) return out;
  std::vector<bool> no_nodes(t.num_nodes(), false);
  std::vector<bool> no_links(t.num_links(), false);
  std::optional<internal::Candidate> first =
      internal::LexMinShortestPath(t, src, dst, no_nodes, no_links);
  if (!first) return out;

  std::vector<internal::Candidate> accepted = {*first};
  std::set<internal::Candidate> pending;
  while (static_cast<int>(accepted.size()) < k) {
    const internal::Candidate& prev = accepted.back();
    std::int64_t root_length = 0;
    for (size_t i = 0; i + 1 < prev.nodes.size(); ++i) {
      const int spur = prev.nodes[i];
      std::vector<bool> node_blocked(t.num_nodes(), false);
      std::vector<bool> link_blocked(t.num_links(), false);
      for (size_t j = 0; j < i; ++j) node_blocked[prev.nodes[j]] = true;
      for (const internal::Candidate& p : accepted) {
        if (p.nodes.size() > i + 1 &&
            std::equal(p.nodes.begin(), p.nodes.begin() + i + 1, prev.nodes.begin())) {
          link_blocked[*t.LinkBetween(p.nodes[i], p.nodes[i + 1])] = true;
        }
      }
      if (std::optional<internal::Candidate> spur_path = internal::LexMinShortestPath(
              t, spur, dst, node_blocked, link_blocked)) {
        internal::Candidate total{root_length + spur_path->length,
                                  {prev.nodes.begin(), prev.nodes.begin() + i}};
        total.nodes.insert(total.nodes.end(), spur_path->nodes.begin(),
                           spur_path->nodes.end());
        if (std::find(accepted.begin(), accepted.end(), total) == accepted.end()) {
          pending.insert(std::move(total));
        }
      }
      root_length += internal::LengthUnits(
          t.link(*t.LinkBetween(prev.nodes[i], prev.nodes[i + 1])).length_km);
    }
    if (pending.empty()) break;
    accepted.push_back(*pending.begin());
    pending.erase(pending.begin());
  }
  for (const internal::Candidate& c : accepted) out.push_back(MakeRoutePath(t, c.nodes));
  return out;
}

// --- Traffic ----------------------------------------------------------------

struct Demand {
  int id = 0;
  int src = 0;  // always the smaller node id
  int dst = 0;
  double weight = 0.0;  // relative magnitude, w_src * w_dst
  double requested_gbps = 0.0;

  bool operator==(const Demand&) const = default;
};

// One demand per unordered node pair with a positive weight product.
inline std::vector<Demand> GenerateDemands(const Topology& t) {
  std::vector<Demand> out;
  for (int i = 0; i < t.num_nodes(); ++i) {
    for (int j = i + 1; j < t.num_nodes(); ++j) {
      const double w = t.node(i).traffic_weight * t.node(j).traffic_weight;
      if (w > 0.0) {
        out.push_back({static_cast<int>(out.size()), i, j, w, 0.0});
      }
    }
  }
  if (out.empty()) throw std::invalid_argument("all node-pair traffic weights are zero");
  return out;
}

// Sets requested rates so they sum to art_tbps while keeping the weight ratios.
inline std::vector<Demand> ScaleDemands(std::vector<Demand> demands, double art_tbps) {
  if (!(art_tbps > 0.0)) throw std::invalid_argument("ART must be > 0");
  double total = 0.0;
  for (const Demand& d : demands) total += d.weight;
  if (!(total > 0.0)) throw std::invalid_argument("demand weights sum to zero");
  for (Demand& d : demands) d.requested_gbps = d.weight / total * art_tbps * 1000.0;
  return demands;
}

}  // namespace mwsplan

#endif  // MWSPLAN_NETGRAPH_HPP_
