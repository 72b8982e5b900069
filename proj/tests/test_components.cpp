// Copyright 2026 The Monotree Authors
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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "monotree/components.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace monotree {
namespace {

using testing::make_graph;
using testing::monochrome_complete;
using testing::random_coloured;

constexpr Colour R = Colour::Red;
constexpr Colour G = Colour::Green;
constexpr Colour B = Colour::Blue;

std::vector<std::vector<Vertex>> partition_of(const ComponentLabelling& l, Colour c) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex id : l[c].ids()) out.push_back(l.members({c, id}).to_vector());
  return out;
}

TEST(Components, AllRedTriangle) {
  const auto l = monochromatic_components(monochrome_complete(3, R));
  EXPECT_EQ(partition_of(l, R), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
  EXPECT_EQ(partition_of(l, G), (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
  EXPECT_EQ(partition_of(l, B), (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
  EXPECT_EQ(l.total_components(), 7u);
}

TEST(Components, EmptyGraph) {
  const auto l = monochromatic_components(ColouredGraph(4));
  for (Colour c : kColours) EXPECT_EQ(partition_of(l, c), (std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {3}}));
}

TEST(Components, MixedPath) {
  const auto l = monochromatic_components(make_graph(3, {{0, 1, R}, {1, 2, B}}));
  EXPECT_EQ(partition_of(l, R), (std::vector<std::vector<Vertex>>{{0, 1}, {2}}));
  EXPECT_EQ(partition_of(l, B), (std::vector<std::vector<Vertex>>{{0}, {1, 2}}));
  EXPECT_EQ(partition_of(l, G), (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
  EXPECT_EQ(l.component_of(2, B), (ComponentRef{B, 1}));
  EXPECT_TRUE(l.is_component({B, 1}));
  EXPECT_FALSE(l.is_component({B, 2}));
}

TEST(Components, MatchBreadthFirstSearch) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto cg = random_coloured(1 + s % 40, 0.15, Seed{s});
    const auto l = monochromatic_components(cg);
    for (Colour c : kColours) EXPECT_EQ(partition_of(l, c), oracle::bfs_components(cg, c));
  }
}

TEST(Components, CoveredVertices) {
  const auto cg = make_graph(4, {{0, 1, R}, {2, 3, G}});
  const auto l = monochromatic_components(cg);
  EXPECT_TRUE(covers_all(l, {{R, 0}, {G, 2}}));
  EXPECT_FALSE(covers_all(l, {{R, 0}, {R, 2}}));
  EXPECT_EQ(covered_vertices(l, {{R, 0}, {R, 2}}).to_vector(), (std::vector<Vertex>{0, 1, 2}));
}

TEST(Shortcut, RedPathClosesTriangle) {
  const auto f = shortcut_graph(make_graph(3, {{0, 1, R}, {1, 2, R}}));
  EXPECT_EQ(f.base.num_edges(), 3u);
  for (const auto& e : f.base.edges()) EXPECT_EQ(e.colour, R);
}

TEST(Shortcut, MixedPathAddsNothing) {
  const auto f = shortcut_graph(make_graph(3, {{0, 1, R}, {1, 2, B}}));
  EXPECT_EQ(f.base.edges(), (std::vector<ColouredEdge>{{0, 1, R}, {1, 2, B}}));
  EXPECT_FALSE(f.base.adjacent(0, 2));
}

TEST(Shortcut, EmptyGraph) {
  const auto f = shortcut_graph(ColouredGraph(5));
  EXPECT_EQ(f.base.num_vertices(), 5u);
  EXPECT_EQ(f.base.num_edges(), 0u);
}

TEST(Shortcut, DirectEdgeColourWins) {
  // 0-2 is blue directly and also joined by a red path.
  const auto f = shortcut_graph(make_graph(3, {{0, 1, R}, {1, 2, R}, {0, 2, B}}));
  EXPECT_EQ(f.base.colour(0, 2), B);
}

TEST(Shortcut, SmallestConnectingColour) {
  const auto f = shortcut_graph(make_graph(4, {{0, 1, B}, {1, 2, B}, {0, 3, G}, {3, 2, G}}));
  EXPECT_EQ(f.base.colour(0, 2), G);
  EXPECT_EQ(f.base.colour(1, 3), std::nullopt);
}

TEST(Shortcut, EdgesMatchOracle) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto cg = random_coloured(2 + s % 20, 0.2, Seed{100 + s});
    const auto f = shortcut_graph(cg);
    for (Vertex u = 0; u < cg.num_vertices(); ++u)
      for (Vertex v = u + 1; v < cg.num_vertices(); ++v) {
        EXPECT_EQ(f.base.adjacent(u, v), oracle::shortcut_adjacent(cg, u, v));
        if (f.base.adjacent(u, v)) {
          const Colour c = *f.base.colour(u, v);
          if (cg.adjacent(u, v)) EXPECT_EQ(c, *cg.colour(u, v));
          const auto comps = oracle::bfs_components(cg, c);
          EXPECT_TRUE(std::any_of(comps.begin(), comps.end(), [&](const auto& comp) {
            return std::binary_search(comp.begin(), comp.end(), u) && std::binary_search(comp.begin(), comp.end(), v);
          }));
        }
      }
  }
}

TEST(Shortcut, Idempotent) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const auto cg = random_coloured(1 + s % 30, 0.12, Seed{200 + s});
    const auto f = shortcut_graph(cg);
    const auto ff = shortcut_graph(f.base);
    EXPECT_EQ(ff.base.graph(), f.base.graph());
  }
}

TEST(Shortcut, PreservesComponentPartitions) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const auto cg = random_coloured(1 + s % 30, 0.15, Seed{300 + s});
    const auto f = shortcut_graph(cg);
    for (Colour c : kColours) EXPECT_EQ(oracle::bfs_components(f.base, c), oracle::bfs_components(cg, c));
    EXPECT_EQ(monochromatic_components(f.base), monochromatic_components(cg));
  }
}

TEST(Shortcut, ContainsG) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const auto cg = random_coloured(1 + s % 30, 0.2, Seed{400 + s});
    const auto f = shortcut_graph(cg);
    for (const auto& e : cg.edges()) EXPECT_TRUE(f.base.adjacent(e.u, e.v));
    ASSERT_TRUE(f.source);
    EXPECT_EQ(*f.source, cg);
  }
}

TEST(Alpha, CompleteIsOne) {
  const auto a = alpha_class(shortcut_graph(monochrome_complete(5, G)));
  EXPECT_EQ(a.kind, AlphaClass::Kind::One);
  EXPECT_FALSE(a.witness);
}

TEST(Alpha, CompleteMinusEdgeIsTwo) {
  SimpleGraph g(5);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v)
      if (!(u == 0 && v == 1)) g.add_edge(u, v);
  EXPECT_EQ(alpha_class(g).kind, AlphaClass::Kind::Two);
}

TEST(Alpha, EmptyTripleIsThree) {
  const auto a = alpha_class(shortcut_graph(ColouredGraph(3)));
  EXPECT_EQ(a.kind, AlphaClass::Kind::ThreeOrMore);
  ASSERT_TRUE(a.witness);
  EXPECT_EQ(*a.witness, (std::array<Vertex, 3>{0, 1, 2}));
}

TEST(Alpha, MatchesBruteForce) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const std::size_t n = 1 + s % 15;
    const auto g = generate_gnp(n, 0.3 + 0.1 * static_cast<double>(s % 7), Seed{s});
    const std::size_t alpha = oracle::alpha_capped(g);
    const auto a = alpha_class(g);
    switch (a.kind) {
      case AlphaClass::Kind::One:
        EXPECT_LE(alpha, 1u);
        break;
      case AlphaClass::Kind::Two:
        EXPECT_EQ(alpha, 2u);
        break;
      case AlphaClass::Kind::ThreeOrMore:
        EXPECT_EQ(alpha, 3u);
        break;
    }
  }
}

}  // namespace
}  // namespace monotree
