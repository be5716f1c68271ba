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

#include "mwsplan/netgraph.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace mwsplan {
namespace {

using oracle::AllSimplePaths;
using oracle::NodeSequences;

Topology Make(int n, const std::vector<Link>& links, std::vector<double> weights = {}) {
  return oracle::MakeTopology(n, links, std::move(weights));
}

TEST(Topology, LoadsBundledGermany) {
  const Topology t = LoadTopology(std::string(MWSPLAN_DATA_DIR) + "/nobel-germany.json");
  EXPECT_EQ(t.num_nodes(), 17);
  EXPECT_EQ(t.num_links(), 26);
  EXPECT_EQ(GenerateDemands(t).size(), 136u);
}

TEST(Topology, LoadsBundledEu) {
  const Topology t = LoadTopology(std::string(MWSPLAN_DATA_DIR) + "/nobel-eu.json");
  EXPECT_EQ(t.num_nodes(), 28);
  EXPECT_EQ(t.num_links(), 41);
  EXPECT_EQ(GenerateDemands(t).size(), 378u);
}

double MeanShortestPathKm(const Topology& t) {
  double sum = 0.0;
  double weight = 0.0;
  for (const Demand& d : GenerateDemands(t)) {
    sum += d.weight * KShortestPaths(t, d.src, d.dst, 1).front().total_length_km;
    weight += d.weight;
  }
  return sum / weight;
}

TEST(Topology, BundledPathLengthsNearReferenceAverages) {
  const Topology ger = LoadTopology(std::string(MWSPLAN_DATA_DIR) + "/nobel-germany.json");
  const Topology eu = LoadTopology(std::string(MWSPLAN_DATA_DIR) + "/nobel-eu.json");
  EXPECT_NEAR(MeanShortestPathKm(ger), 420.0, 0.25 * 420.0);
  EXPECT_NEAR(MeanShortestPathKm(eu), 1100.0, 0.25 * 1100.0);
}

TEST(Topology, SpanCounts) {
  const Topology t = Make(2, {{0, 1, 80.0}});
  EXPECT_EQ(t.link(0).span_count, 1);
  EXPECT_EQ(SpanCount(80.1), 2);
  EXPECT_EQ(SpanCount(160.0), 2);
  EXPECT_EQ(SpanCount(1.0), 1);
}

TEST(Topology, RejectsInvalidGraphs) {
  EXPECT_THROW(Make(2, {{0, 0, 10.0}}), ParseError);
  EXPECT_THROW(Make(2, {{0, 2, 10.0}}), ParseError);
  EXPECT_THROW(Make(2, {{0, 1, 0.0}}), ParseError);
  EXPECT_THROW(Make(2, {{0, 1, 10.0}, {1, 0, 12.0}}), ParseError);
  EXPECT_THROW(Make(3, {{0, 1, 10.0}}), ParseError);  // disconnected
  EXPECT_THROW(Make(2, {{0, 1, 10.0}}, {1.0, -1.0}), ParseError);
}

TEST(ParseTopology, DerivesMissingLengthFromCoordinates) {
  const Topology t = ParseTopology(R"({
    "name": "pair",
    "nodes": [{"id": 0, "name": "a", "lat": 0, "lon": 0},
              {"id": 1, "name": "b", "lat": 0, "lon": 1}],
    "links": [{"a": 0, "b": 1}]})");
  EXPECT_EQ(t.name(), "pair");
  EXPECT_NEAR(t.link(0).length_km, 1.2 * 111.195, 0.01);
  EXPECT_EQ(t.link(0).span_count, 2);
}

TEST(ParseTopology, ReportsErrors) {
  EXPECT_THROW(ParseTopology("{"), ParseError);
  EXPECT_THROW(ParseTopology(R"({"nodes": []})"), ParseError);
  EXPECT_THROW(ParseTopology(R"({"nodes": [{"id": 0}, {"id": 2}], "links": []})"),
               ParseError);
  EXPECT_THROW(ParseTopology(R"({"nodes": [{"id": "x"}], "links": []})"), ParseError);
  EXPECT_THROW(LoadTopology("/nonexistent/topology.json"), ParseError);
}

TEST(KShortestPaths, Triangle) {
  const Topology t = Make(3, {{0, 1, 100}, {1, 2, 100}, {0, 2, 100}});
  const auto paths = KShortestPaths(t, 0, 2, 3);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0].nodes, (std::vector<int>{0, 2}));
  EXPECT_DOUBLE_EQ(paths[0].total_length_km, 100.0);
  EXPECT_EQ(paths[1].nodes, (std::vector<int>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(paths[1].total_length_km, 200.0);
}

TEST(KShortestPaths, SquareWithLongEdge) {
  // Cycle 0-1-2-3-0 with the 3-0 edge long; route between opposite corners.
  const Topology t = Make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 10}});
  const auto paths = KShortestPaths(t, 0, 2, 2);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_DOUBLE_EQ(paths[0].total_length_km, 2.0);
  EXPECT_DOUBLE_EQ(paths[1].total_length_km, 11.0);
  EXPECT_EQ(paths[0].links, (std::vector<int>{0, 1}));
  EXPECT_EQ(paths[1].total_span_count, 2);
}

TEST(KShortestPaths, RejectsBadEndpoints) {
  const Topology t = Make(2, {{0, 1, 10}});
  EXPECT_THROW(KShortestPaths(t, 0, 0, 3), std::invalid_argument);
  EXPECT_THROW(KShortestPaths(t, 0, 5, 3), std::out_of_range);
  EXPECT_TRUE(KShortestPaths(t, 0, 1, 0).empty());
}

TEST(KShortestPaths, MatchesSimplePathEnumeration) {
  EXPECT_EQ(oracle::KShortestPathsSuite(1500), std::nullopt);
}

TEST(GenerateDemands, WeightProducts) {
  const Topology line = Make(3, {{0, 1, 10}, {1, 2, 10}}, {1, 0, 1});
  const auto one = GenerateDemands(line);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].src, 0);
  EXPECT_EQ(one[0].dst, 2);

  const Topology tri = Make(3, {{0, 1, 10}, {1, 2, 10}}, {2, 1, 1});
  const auto d = GenerateDemands(tri);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_DOUBLE_EQ(d[0].weight, 2.0);
  EXPECT_DOUBLE_EQ(d[1].weight, 2.0);
  EXPECT_DOUBLE_EQ(d[2].weight, 1.0);

  const auto scaled = ScaleDemands(d, 5.0);
  EXPECT_DOUBLE_EQ(scaled[0].requested_gbps, 2000.0);
  EXPECT_DOUBLE_EQ(scaled[1].requested_gbps, 2000.0);
  EXPECT_DOUBLE_EQ(scaled[2].requested_gbps, 1000.0);

  EXPECT_THROW(GenerateDemands(Make(2, {{0, 1, 10}}, {0, 0})), std::invalid_argument);
  EXPECT_THROW(ScaleDemands(d, 0.0), std::invalid_argument);
}

TEST(ScaleDemands, UniformAndLinear) {
  std::vector<Link> links;
  for (int i = 1; i < 17; ++i) links.push_back({0, i, 50});
  const Topology star = Make(17, links);
  const auto d = ScaleDemands(GenerateDemands(star), 136.0);
  ASSERT_EQ(d.size(), 136u);
  for (const Demand& x : d) EXPECT_NEAR(x.requested_gbps, 1000.0, 1e-9);
  const auto doubled = ScaleDemands(d, 272.0);
  for (size_t i = 0; i < d.size(); ++i) {
    EXPECT_NEAR(doubled[i].requested_gbps, 2.0 * d[i].requested_gbps, 1e-9);
  }
}

}  // namespace
}  // namespace mwsplan
