// Copyright 2026 The bhcut Authors.
//
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

#include "bhcut/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

#include "bhcut/constructions.hpp"
#include "bhcut/error.hpp"
#include "bhcut/solver.hpp"
#include "oracle.hpp"

namespace bhcut {
namespace {

VertexIndex idx(std::vector<int> coords) { return Vertex(std::move(coords)).index(); }

std::vector<VertexIndex> random_members(std::mt19937& rng, std::size_t count) {
  std::vector<VertexIndex> all(count);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> size(0, count - 1);
  all.resize(size(rng));
  return all;
}

std::vector<char> as_mask(const FaultSet& f, std::size_t count) {
  std::vector<char> mask(count, 0);
  for (VertexIndex v : f.members()) mask[v] = 1;
  return mask;
}

TEST(FaultSetTest, SortsDeduplicatesAndValidates) {
  const CubeGraph g = build_direct(2);
  const FaultSet f(g, {5, 1, 5, 3});
  EXPECT_EQ(f.members(), (std::vector<VertexIndex>{1, 3, 5}));
  EXPECT_TRUE(f.contains(3));
  EXPECT_FALSE(f.contains(4));
  EXPECT_THROW(FaultSet(g, {16}), Error);
}

TEST(ComponentsTest, NeighborhoodOfOneVertexIsolatesItAndItsPartner) {
  const CubeGraph g = build_direct(2);
  const auto nbrs = g.neighbors(idx({0, 0}));
  const FaultSet f(g, {nbrs.begin(), nbrs.end()});
  const ComponentReport report = components(g, f);
  EXPECT_FALSE(report.connected);
  for (const VertexIndex v : {idx({0, 0}), idx({2, 0})}) {
    EXPECT_TRUE(std::any_of(report.components.begin(), report.components.end(),
                            [&](const Component& c) {
                              return c.vertices == std::vector<VertexIndex>{v};
                            }));
  }

  const auto census = oracle::census(2, as_mask(f, 16));
  EXPECT_EQ(census.components, report.components.size());
  EXPECT_NE(std::find(census.members.begin(), census.members.end(),
                      std::vector<std::size_t>{idx({2, 0})}),
            census.members.end());
}

TEST(ComponentsTest, EmptyFaultSetLeavesOneComponent) {
  const CubeGraph g = build_direct(2);
  const ComponentReport report = components(g, FaultSet());
  EXPECT_TRUE(report.connected);
  ASSERT_EQ(report.components.size(), 1u);
  EXPECT_EQ(report.components[0].size(), 16u);
  EXPECT_EQ(report.components[0].min_degree, 4);
}

TEST(ComponentsTest, ConstructionCutOfBH3LeavesTwoComponents) {
  const CubeGraph g = build_direct(3);
  EXPECT_EQ(components(g, build_cut(g)).components.size(), 2u);
}

TEST(ComponentsTest, FullDeletionIsAnError) {
  const CubeGraph g = build_direct(1);
  try {
    components(g, FaultSet(g, {0, 1, 2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyGraph);
  }
}

TEST(ComponentsTest, OrderedBySmallestIndexAndMinDegreeIsInduced) {
  const CubeGraph g = build_direct(2);
  // Removing all of B^1 and B^3 leaves B^0 and B^2, each a copy of BH_1.
  const SubcubeSplit split = split_subcubes(g);
  std::vector<VertexIndex> members = split.parts[1];
  members.insert(members.end(), split.parts[3].begin(), split.parts[3].end());
  const ComponentReport report = components(g, FaultSet(g, members));
  ASSERT_EQ(report.components.size(), 2u);
  EXPECT_EQ(report.components[0].vertices, split.parts[0]);
  EXPECT_EQ(report.components[1].vertices, split.parts[2]);
  EXPECT_EQ(report.components[0].min_degree, 2);
}

TEST(RestrictedCutTest, Examples) {
  const CubeGraph g3 = build_direct(3);
  EXPECT_TRUE(is_restricted_h_cut(g3, build_cut(g3), 4).is_cut);
  EXPECT_FALSE(is_restricted_h_cut(g3, FaultSet(), 2).is_cut);

  const CubeGraph g4 = build_direct(4);
  const CutVerdict v = is_restricted_h_cut(g4, build_cut(g4), 3);
  EXPECT_FALSE(v.is_cut);
  ASSERT_TRUE(v.failing_component.has_value());
  EXPECT_EQ(v.failing_value, 2u);
  const auto report = components(g4, build_cut(g4));
  const auto& failing = report.components[*v.failing_component].vertices;
  EXPECT_TRUE(std::binary_search(failing.begin(), failing.end(), idx({0, 3, 0, 1})));
}

TEST(RestrictedCutTest, ParameterRange) {
  const CubeGraph g = build_direct(2);
  EXPECT_THROW(is_restricted_h_cut(g, FaultSet(), 4), Error);
  EXPECT_THROW(is_restricted_h_cut(g, FaultSet(), -1), Error);
  EXPECT_NO_THROW(is_restricted_h_cut(g, FaultSet(), 3));
}

TEST(GExtraCutTest, Examples) {
  const CubeGraph g = build_direct(2);
  const std::vector<VertexIndex> pair = {idx({0, 0}), idx({2, 0})};
  const FaultSet f(g, neighborhood(g, pair));
  EXPECT_EQ(f.size(), 4u);
  EXPECT_TRUE(is_g_extra_cut(g, f, 0).is_cut);
  EXPECT_FALSE(is_g_extra_cut(g, f, 1).is_cut);
  const auto found = brute_force_min_cut(g, {CutKind::kGExtra, 1}, 4);
  ASSERT_TRUE(found.witness.has_value());
  EXPECT_TRUE(is_g_extra_cut(g, FaultSet(g, *found.witness), 1).is_cut);
  EXPECT_FALSE(is_g_extra_cut(g, FaultSet(), 1).is_cut);
  EXPECT_THROW(is_g_extra_cut(g, FaultSet(), -1), Error);
}

TEST(GExtraCutTest, NoThreeVertexOneExtraCutInBH2) {
  const CubeGraph g = build_direct(2);
  std::size_t checked = 0;
  oracle::for_each_subset(16, 3, [&](const std::vector<char>& mask) {
    std::vector<VertexIndex> members;
    for (VertexIndex v = 0; v < 16; ++v) {
      if (mask[v]) members.push_back(v);
    }
    ++checked;
    EXPECT_FALSE(is_g_extra_cut(g, FaultSet(g, members), 1).is_cut);
    EXPECT_FALSE(oracle::extra_cut(oracle::census(2, mask), 1));
  });
  EXPECT_EQ(checked, 560u);
}

TEST(PartnerClosureTest, Examples) {
  const CubeGraph g = build_direct(2);
  const std::vector<VertexIndex> closed = {idx({0, 0}), idx({2, 0})};
  const std::vector<VertexIndex> open = {idx({0, 0}), idx({1, 0})};
  EXPECT_TRUE(partner_closure_check(g, closed));
  EXPECT_FALSE(partner_closure_check(g, open));
  EXPECT_TRUE(partner_closure_check(g, std::vector<VertexIndex>{}));
}

TEST(PartnerClosureTest, ComponentsOfMinimumOneExtraCutsOfBH2) {
  const CubeGraph g = build_direct(2);
  // The oracle finds the minimum 1-extra cuts (size 4) independently.
  std::size_t minimum_cuts = 0;
  oracle::for_each_subset(16, 4, [&](const std::vector<char>& mask) {
    const auto census = oracle::census(2, mask);
    if (!oracle::extra_cut(census, 1)) return;
    ++minimum_cuts;
    std::vector<VertexIndex> members;
    for (VertexIndex v = 0; v < 16; ++v) {
      if (mask[v]) members.push_back(v);
    }
    const ComponentReport report = components(g, FaultSet(g, members));
    for (const Component& c : report.components) {
      EXPECT_TRUE(partner_closure_check(g, c.vertices));
      EXPECT_EQ(c.size() % 2, 0u);
    }
    EXPECT_TRUE(partner_closure_check(g, members));
  });
  EXPECT_GT(minimum_cuts, 0u);
}

TEST(NeighborhoodTest, ExcludesTheSetItself) {
  const CubeGraph g = build_direct(2);
  const std::vector<VertexIndex> s = {idx({0, 0}), idx({1, 0})};
  const auto n = neighborhood(g, s);
  EXPECT_EQ(std::count(n.begin(), n.end(), idx({0, 0})), 0);
  EXPECT_EQ(std::count(n.begin(), n.end(), idx({1, 0})), 0);
  // N((0,0)) = {(1,0),(3,0),(1,1),(3,1)}; N((1,0)) = {(0,0),(2,0),(0,3),(2,3)}
  EXPECT_EQ(n.size(), 6u);
}

// Random fault sets: verdicts against the oracle census and the definition
// lattice (monotone in h, bottom equivalences).
TEST(CutPropertiesTest, RandomFaultSets) {
  std::mt19937 rng(20261014);
  for (int n = 2; n <= 3; ++n) {
    const CubeGraph g = build_direct(n);
    CutTester tester(g);
    for (int trial = 0; trial < 400; ++trial) {
      const FaultSet f(g, random_members(rng, g.vertex_count()));
      const ComponentReport report = components(g, f);
      std::size_t total = 0;
      for (const Component& c : report.components) total += c.size();
      EXPECT_EQ(total, g.vertex_count() - f.size());

      if (n == 2) {
        const auto census = oracle::census(n, as_mask(f, g.vertex_count()));
        ASSERT_EQ(census.components, report.components.size());
        for (std::size_t i = 0; i < census.components; ++i) {
          EXPECT_EQ(census.min_degrees[i], report.components[i].min_degree);
        }
      }

      const bool plain = is_plain_cut(g, f).is_cut;
      EXPECT_EQ(is_restricted_h_cut(g, f, 0).is_cut, plain);
      EXPECT_EQ(is_g_extra_cut(g, f, 0).is_cut, plain);
      EXPECT_EQ(is_restricted_h_cut(g, f, 1).is_cut, is_g_extra_cut(g, f, 1).is_cut);
      for (int h = 1; h < g.degree(); ++h) {
        const bool at_h = is_restricted_h_cut(g, f, h).is_cut;
        if (at_h) EXPECT_TRUE(is_restricted_h_cut(g, f, h - 1).is_cut);
        EXPECT_EQ(tester.test(f.members(), {CutKind::kRestricted, h}), at_h);
      }
      for (int x = 0; x <= 6; ++x) {
        EXPECT_EQ(tester.test(f.members(), {CutKind::kGExtra, x}), is_g_extra_cut(g, f, x).is_cut);
      }
      EXPECT_EQ(tester.test(f.members(), {CutKind::kPlain, 0}), plain);
    }
  }
}

TEST(CutKindTest, NamesRoundTrip) {
  for (CutKind k : {CutKind::kPlain, CutKind::kGExtra, CutKind::kRestricted}) {
    EXPECT_EQ(parse_cut_kind(cut_kind_name(k)), k);
  }
  EXPECT_THROW(parse_cut_kind("edge"), Error);
}

}  // namespace
}  // namespace bhcut
