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

#include "monotree/errors.hpp"
#include "monotree/hypergraph.hpp"
#include "monotree/solver.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

namespace monotree {
namespace {

using testing::make_graph;
using testing::monochrome_complete;
using testing::random_coloured;
using testing::three_star_k6;

constexpr Colour R = Colour::Red;
constexpr Colour G = Colour::Green;
constexpr Colour B = Colour::Blue;

std::size_t tree_edges(const Tree& t) { return t.parent.size() - 1; }

TEST(Solve, AllRedK5) {
  const auto cg = monochrome_complete(5, R);
  const auto sol = solve_cover(cg);
  ASSERT_EQ(sol.cover.size(), 1u);
  EXPECT_EQ(sol.cover.trees[0].colour, R);
  EXPECT_EQ(tree_edges(sol.cover.trees[0]), 4u);
  EXPECT_EQ(sol.trace.branch, Branch::Egp);
  EXPECT_TRUE(verify_cover(cg, sol.cover).ok());
}

TEST(Solve, TwoColouredK6IsOneTree) {
  const auto k6 = generate_gnp(6, 1.0, Seed{});
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto cg = colour_random(k6, Seed{s}, 2);
    EXPECT_EQ(solve_cover(cg).cover.size(), 1u);
    EXPECT_EQ(oracle::min_component_cover(cg), 1u);
  }
}

TEST(Solve, ThreeStarNeedsThree) {
  const auto cg = three_star_k6();
  const auto sol = solve_cover(cg);
  EXPECT_EQ(sol.cover.size(), 3u);
  EXPECT_TRUE(sol.trace.branch == Branch::AlphaGe3 || sol.trace.branch == Branch::ExactFallback);
  ASSERT_TRUE(sol.trace.exact_size);
  EXPECT_EQ(*sol.trace.exact_size, 3u);
  EXPECT_EQ(oracle::min_component_cover(cg), 3u);
}

TEST(Solve, EmptyGraph) {
  const auto sol = solve_cover(ColouredGraph(0));
  EXPECT_EQ(sol.cover.size(), 0u);
  const auto one = solve_cover(ColouredGraph(1));
  EXPECT_EQ(one.cover.size(), 1u);
}

TEST(AlphaGe3, ThreeStarTriple) {
  const auto cg = three_star_k6();
  const auto f = shortcut_graph(cg);
  const auto labelling = monochromatic_components(cg);
  AlphaGe3Trace trace;
  const auto out = strategy_alpha_ge3(cg, f, {0, 1, 2}, labelling, &trace);
  ASSERT_TRUE(out.cover);
  EXPECT_EQ(*out.cover, (std::vector<ComponentRef>{{R, 0}, {G, 1}, {B, 2}}));
  EXPECT_EQ(trace.common_neighbourhood, 3u);
  EXPECT_EQ(trace.x_rbg, 3u);
  EXPECT_EQ(trace.pattern, (std::array<Colour, 3>{R, G, B}));
  EXPECT_EQ(trace.outside, 0u);
  EXPECT_EQ(trace.candidates.size(), 5u);
}

TEST(AlphaGe3, NoCommonNeighbour) {
  const auto cg = make_graph(5, {{0, 3, R}, {1, 3, G}, {2, 4, B}});
  const auto out = strategy_alpha_ge3(cg, shortcut_graph(cg), {0, 1, 2}, monochromatic_components(cg));
  EXPECT_FALSE(out.cover);
  ASSERT_FALSE(out.notes.empty());
  EXPECT_NE(out.notes.front().find("no common neighbour"), std::string::npos);
}

TEST(AlphaGe3, IsolatedVertices) {
  const ColouredGraph cg(3);
  EXPECT_FALSE(strategy_alpha_ge3(cg, shortcut_graph(cg), {0, 1, 2}, monochromatic_components(cg)).cover);
  const auto sol = solve_cover(cg);
  EXPECT_EQ(sol.cover.size(), 3u);
  EXPECT_EQ(sol.trace.branch, Branch::ExactFallback);
}

TEST(Alpha2, KonigSingleGreen) {
  const auto cg = monochrome_complete(3, G);
  const auto h = build_component_hypergraph(monochromatic_components(cg));
  Alpha2Trace trace;
  const auto out = strategy_alpha2(cg, shortcut_graph(cg), h, monochromatic_components(cg), R, &trace);
  ASSERT_TRUE(out.cover);
  EXPECT_EQ(*out.cover, (std::vector<ComponentRef>{{G, 0}}));
  EXPECT_EQ(trace.nu_l, 1u);
  EXPECT_EQ(trace.case_number, 0);
}

TEST(Alpha2, SingleVertex) {
  const ColouredGraph cg(1);
  const auto labelling = monochromatic_components(cg);
  const auto h = build_component_hypergraph(labelling);
  EXPECT_EQ(h.num_edges(), 1u);
  Alpha2Trace trace;
  const auto out = strategy_alpha2(cg, shortcut_graph(cg), h, labelling, R, &trace);
  ASSERT_TRUE(out.cover);
  EXPECT_EQ(out.cover->size(), 1u);
  EXPECT_EQ(trace.nu_l, 1u);
}

TEST(Alpha2, DenseRandomInstances) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto cg = random_coloured(40, 0.8, Seed{s});
    const auto f = shortcut_graph(cg);
    const auto labelling = monochromatic_components(cg);
    const auto h = build_component_hypergraph(labelling);
    const auto out = strategy_alpha2(cg, f, h, labelling);
    ASSERT_TRUE(out.cover) << "seed " << s;
    EXPECT_LE(out.cover->size(), 3u);
    EXPECT_TRUE(verify_cover(cg, components_to_trees(cg, *out.cover)).ok());
    EXPECT_GE(out.cover->size(), tau_exact(h).size());
  }
}

TEST(Alpha2, EveryCaseCovers) {
  std::array<int, 4> cases{};
  for (std::uint64_t s = 0; s < 3000; ++s) {
    const auto cg = random_coloured(6 + 2 * (s % 8), 0.3 + 0.1 * static_cast<double>(s % 3), Seed{50000 + s});
    const auto f = shortcut_graph(cg);
    if (alpha_class(f).kind != AlphaClass::Kind::Two) continue;
    const auto labelling = monochromatic_components(cg);
    const auto h = build_component_hypergraph(labelling);
    Alpha2Trace trace;
    const auto out = strategy_alpha2(cg, f, h, labelling, Colour::Red, &trace);
    ASSERT_TRUE(out.cover) << "seed " << s;
    EXPECT_LE(out.cover->size(), 3u);
    EXPECT_TRUE(covers_all(labelling, *out.cover));
    EXPECT_EQ(trace.nu_l >= 4, trace.case_number > 0);
    ++cases[trace.case_number];
  }
  for (int c = 0; c < 4; ++c) EXPECT_GT(cases[c], 0) << "case " << c << " never reached";
}

TEST(Egp, AllRedK4) {
  const auto f = shortcut_graph(monochrome_complete(4, R));
  EXPECT_EQ(egp_partition_search(f), (std::vector<ComponentRef>{{R, 0}}));
}

TEST(Egp, RedMatchingBlueRest) {
  const auto cg = make_graph(4, {{0, 1, R}, {2, 3, R}, {0, 2, B}, {0, 3, B}, {1, 2, B}, {1, 3, B}});
  EXPECT_EQ(egp_partition_search(shortcut_graph(cg)), (std::vector<ComponentRef>{{B, 0}}));
}

TEST(Egp, RequiresCompleteGraph) {
  EXPECT_THROW(egp_partition_search(shortcut_graph(ColouredGraph(3))), PreconditionError);
}

TEST(Egp, RandomCompleteColourings) {
  const auto k7 = generate_gnp(7, 1.0, Seed{});
  for (std::uint64_t s = 0; s < 500; ++s) {
    const auto cg = colour_random(k7, Seed{s});
    const auto pair = egp_partition_search(shortcut_graph(cg));
    EXPECT_LE(pair.size(), 2u);
    EXPECT_TRUE(covers_all(monochromatic_components(cg), pair));
    EXPECT_EQ(pair.size(), oracle::min_component_cover(cg));
  }
}

TEST(Trees, SingleRedComponent) {
  const auto cg = monochrome_complete(3, R);
  const auto tc = components_to_trees(cg, {{R, 0}});
  ASSERT_EQ(tc.size(), 1u);
  EXPECT_EQ(tree_edges(tc.trees[0]), 2u);
  EXPECT_EQ(tc.trees[0].vertices(), (std::vector<Vertex>{0, 1, 2}));
}

TEST(Trees, MissingVertexIsAnError) {
  const auto cg = make_graph(3, {{0, 1, R}});
  EXPECT_THROW(components_to_trees(cg, {{R, 0}}), ContractError);
  EXPECT_THROW(components_to_trees(cg, {{R, 1}, {R, 2}}), ContractError);
}

TEST(Trees, OverlapAllowed) {
  const auto cg = make_graph(3, {{0, 1, R}, {1, 2, B}});
  const auto tc = components_to_trees(cg, {{R, 0}, {B, 1}});
  EXPECT_EQ(tc.size(), 2u);
  EXPECT_TRUE(verify_cover(cg, tc).ok());
}

bool has_violation(const Verdict& v, Violation::Kind kind, const std::string& text) {
  return std::any_of(v.violations.begin(), v.violations.end(), [&](const Violation& x) {
    return x.kind == kind && x.message.find(text) != std::string::npos;
  });
}

TEST(Verify, ValidCover) {
  const auto cg = monochrome_complete(3, R);
  EXPECT_TRUE(verify_cover(cg, components_to_trees(cg, {{R, 0}})).ok());
}

TEST(Verify, NonEdge) {
  const auto cg = make_graph(3, {{0, 1, R}, {1, 2, R}});
  Tree t{R, 0, {{0, 0}, {2, 0}, {1, 2}}};
  const auto v = verify_cover(cg, {{t}});
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(has_violation(v, Violation::Kind::MissingEdge, "missing edge"));
}

TEST(Verify, WrongColour) {
  const auto cg = make_graph(2, {{0, 1, B}});
  Tree t{R, 0, {{0, 0}, {1, 0}}};
  EXPECT_FALSE(verify_cover(cg, {{t}}).ok());
}

TEST(Verify, Uncovered) {
  const auto cg = monochrome_complete(6, R);
  Tree t{R, 0, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}};
  const auto v = verify_cover(cg, {{t}});
  EXPECT_TRUE(has_violation(v, Violation::Kind::UncoveredVertex, "uncovered vertex"));
  EXPECT_EQ(v.violations.size(), 1u);
}

TEST(Verify, Cycle) {
  const auto cg = monochrome_complete(3, R);
  Tree t{R, 0, {{0, 0}, {1, 2}, {2, 1}}};
  EXPECT_FALSE(verify_cover(cg, {{t}}).ok());
}

TEST(Properties, SoundOnRandomInstances) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto cg = random_coloured(5 + s % 40, 0.2 + 0.1 * static_cast<double>(s % 8), Seed{7000 + s});
    const auto sol = solve_cover(cg);
    EXPECT_TRUE(verify_cover(cg, sol.cover).ok());
    ASSERT_TRUE(sol.trace.exact_size);
    EXPECT_EQ(sol.cover.size(), *sol.trace.exact_size);
  }
}

TEST(Properties, OptimalOnSmallGraphs) {
  const double ps[] = {0.3, 0.6, 0.9};
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto cg = random_coloured(2 + s % 8, ps[s % 3], Seed{8000 + s});
    const auto h = build_component_hypergraph(monochromatic_components(cg));
    const std::size_t brute = oracle::min_component_cover(cg);
    EXPECT_EQ(solve_cover(cg).cover.size(), brute);
    EXPECT_EQ(tau_exact(h).size(), brute);
  }
}

TEST(Properties, AlphaOneGivesAtMostTwo) {
  int seen = 0;
  for (std::uint64_t s = 0; s < 300; ++s) {
    const auto cg = random_coloured(4 + s % 20, 0.9, Seed{9000 + s});
    const auto sol = solve_cover(cg);
    if (sol.trace.alpha.kind != AlphaClass::Kind::One) continue;
    ++seen;
    EXPECT_LE(sol.cover.size(), 2u);
    EXPECT_EQ(sol.trace.branch, Branch::Egp);
  }
  EXPECT_GT(seen, 0);
}

TEST(Properties, AlphaTwoBoundsMatching) {
  int seen = 0;
  for (std::uint64_t s = 0; s < 400; ++s) {
    const auto cg = random_coloured(4 + s % 25, 0.5 + 0.05 * static_cast<double>(s % 9), Seed{10000 + s});
    const auto f = shortcut_graph(cg);
    if (alpha_class(f).kind != AlphaClass::Kind::Two) continue;
    ++seen;
    EXPECT_LE(nu_exact(build_component_hypergraph(monochromatic_components(cg))).size(), 2u);
  }
  EXPECT_GT(seen, 0);
}

TEST(Properties, ShortcutGivesSameSize) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto cg = random_coloured(5 + s % 20, 0.3, Seed{11000 + s});
    EXPECT_EQ(solve_cover(cg).cover.size(), solve_cover(shortcut_graph(cg).base).cover.size());
  }
}

TEST(Properties, Deterministic) {
  const auto cg = random_coloured(50, 0.5, Seed{12});
  const auto a = solve_cover(cg);
  const auto b = solve_cover(cg);
  ASSERT_EQ(a.cover.size(), b.cover.size());
  for (std::size_t i = 0; i < a.cover.size(); ++i) EXPECT_EQ(a.cover.trees[i].parent, b.cover.trees[i].parent);
  EXPECT_EQ(a.trace.chosen, b.trace.chosen);
}

TEST(Properties, PivotChoiceStillCovers) {
  for (Colour pivot : kColours)
    for (std::uint64_t s = 0; s < 30; ++s) {
      const auto cg = random_coloured(30, 0.7, Seed{13000 + s});
      SolverConfig cfg;
      cfg.link_pivot = pivot;
      cfg.exact_threshold = 0;
      const auto sol = solve_cover(cg, cfg);
      EXPECT_TRUE(verify_cover(cg, sol.cover).ok());
      EXPECT_LE(sol.cover.size(), 3u);
    }
}

}  // namespace
}  // namespace monotree
