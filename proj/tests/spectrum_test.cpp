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

#include "mwsplan/spectrum.hpp"

#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace mwsplan {
namespace {

void ExpectConserved(const SpectrumGrid& g) {
  for (int l = 0; l < g.num_links(); ++l) {
    const SlotCounts c = g.Counts(l);
    EXPECT_EQ(c.free + c.used + c.reserved, g.slots_per_link());
  }
}

TEST(FirstFit, Examples) {
  SpectrumGrid g(3);
  const std::vector<int> one = {0};
  EXPECT_EQ(g.FirstFit(one, 3), (SlotBlock{0, 3}));
  g.Allocate(one, {0, 3}, 7);
  EXPECT_EQ(g.FirstFit(one, 3), (SlotBlock{3, 3}));

  // Link 1 free on 0-5 only, link 2 busy on 0-2.
  g.Allocate(std::vector<int>{1}, {6, 394}, 8);
  g.Allocate(std::vector<int>{2}, {0, 3}, 9);
  EXPECT_EQ(g.FirstFit(std::vector<int>{1, 2}, 3), (SlotBlock{3, 3}));
  EXPECT_EQ(g.FirstFit(std::vector<int>{1, 2}, 4), std::nullopt);
  EXPECT_THROW(g.FirstFit(one, 0), std::invalid_argument);
}

TEST(FirstFit, MatchesExhaustiveScan) {
  EXPECT_EQ(oracle::FirstFitSuite(1200), std::nullopt);
}

TEST(Allocate, OwnershipConflictsAndRelease) {
  SpectrumGrid g(4);
  const std::vector<int> path = {0, 2, 3};
  g.Allocate(path, {10, 6}, 42);
  EXPECT_EQ(g.at(2, 12).owner, 42);
  EXPECT_EQ(g.at(2, 12).state, SlotState::kUsed);
  EXPECT_EQ(g.at(1, 12).state, SlotState::kFree);
  EXPECT_THROW(g.Allocate(path, {10, 6}, 43), SpectrumConflict);
  EXPECT_THROW(g.Allocate(std::vector<int>{1, 2}, {15, 3}, 44), SpectrumConflict);
  // The failed call must not have touched link 1.
  EXPECT_EQ(g.at(1, 15).state, SlotState::kFree);
  g.Release(path, {10, 6});
  EXPECT_NO_THROW(g.Allocate(path, {10, 6}, 45));
  EXPECT_THROW(g.Allocate(path, {398, 3}, 1), SpectrumConflict);
  EXPECT_THROW(g.Allocate(path, {0, 1}, 1, SlotState::kFree), std::invalid_argument);
  ExpectConserved(g);
}

TEST(ReserveFixedFsr, Examples) {
  SpectrumGrid g(1);
  const std::vector<int> path = {0};
  EXPECT_EQ(g.ReserveFixedFsr(path, 4, 3, 0), (SlotBlock{0, 12}));
  EXPECT_EQ(g.Counts(0).reserved, 12);
  EXPECT_THROW(g.ReserveFixedFsr(path, 4, 3, 0), std::invalid_argument);

  SpectrumGrid gap(1);
  gap.Allocate(path, {11, 389}, 1);
  EXPECT_EQ(gap.ReserveFixedFsr(path, 4, 3, 0), std::nullopt);
  EXPECT_TRUE(gap.reservations().empty());

  SpectrumGrid big(1);
  int fitted = 0;
  while (big.ReserveFixedFsr(path, 8, 12, fitted)) ++fitted;
  EXPECT_EQ(fitted, 4);
  EXPECT_EQ(big.reservations().at(0).block, (SlotBlock{0, 96}));
  ExpectConserved(big);
}

TEST(ActivateReservedLine, Transitions) {
  SpectrumGrid g(2);
  const std::vector<int> path = {0, 1};
  g.Allocate(path, {0, 5}, 99);
  ASSERT_TRUE(g.ReserveFixedFsr(path, 4, 3, 7));
  const SlotBlock line = g.ActivateReservedLine(7, 2, 100);
  EXPECT_EQ(line, (SlotBlock{11, 3}));
  for (int s = 11; s < 14; ++s) {
    EXPECT_EQ(g.at(1, s).state, SlotState::kUsed);
    EXPECT_EQ(g.at(1, s).owner, 100);
  }
  EXPECT_EQ(g.at(1, 10).state, SlotState::kReserved);
  EXPECT_THROW(g.ActivateReservedLine(7, 2, 101), SpectrumConflict);
  EXPECT_THROW(g.ActivateReservedLine(7, 4, 101), std::out_of_range);
  EXPECT_THROW(g.ActivateReservedLine(8, 0, 101), std::invalid_argument);
  for (int i : {0, 1, 3}) g.ActivateReservedLine(7, i, 200 + i);
  EXPECT_EQ(g.Counts(0).reserved, 0);
  EXPECT_EQ(g.Counts(0).used, 17);
  ExpectConserved(g);
}

TEST(SpectrumGrid, CsvDump) {
  SpectrumGrid g(1, 3);
  g.Allocate(std::vector<int>{0}, {1, 1}, 5);
  std::ostringstream out;
  g.WriteCsv(out);
  EXPECT_EQ(out.str(), "link_id,slot,state,owner\n0,0,free,\n0,1,used,5\n0,2,free,\n");
}

}  // namespace
}  // namespace mwsplan
