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

#ifndef MONOTREE_SOLVER_HPP_
#define MONOTREE_SOLVER_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monotree/components.hpp"
#include "monotree/graph.hpp"
#include "monotree/hypergraph.hpp"

namespace monotree {

/// A monochromatic tree given by parent pointers; the root is its own parent.
struct Tree {
  Colour colour = Colour::Red;
  Vertex root = 0;
  std::map<Vertex, Vertex> parent;

  std::vector<Vertex> vertices() const;
};

struct TreeCover {
  std::vector<Tree> trees;

  std::size_t size() const { return trees.size(); }
};

struct Violation {
  enum class Kind { BadRoot, BadParent, MissingEdge, WrongColour, Cycle, UncoveredVertex };

  Kind kind;
  std::size_t tree;  // index of the offending tree; unused for UncoveredVertex
  Vertex vertex;
  std::string message;
};

struct Verdict {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks every tree (edges present in G with the tree's colour, acyclic,
/// connected to its root) and that the trees jointly cover V(G). Reports all
/// violations found.
Verdict verify_cover(const ColouredGraph& cg, const TreeCover& tc);

/// One breadth-first spanning tree per component, rooted at its smallest
/// vertex. Throws ContractError if a ref is not a component of `cg` or if
/// the components leave a vertex uncovered.
TreeCover components_to_trees(const ColouredGraph& cg, const std::vector<ComponentRef>& comps);

enum class Branch { Egp, AlphaGe3, Alpha2Konig, Alpha2Case1, Alpha2Case2, Alpha2Case3, ExactFallback };

const char* to_string(Branch branch);

struct AlphaGe3Trace {
  std::array<Vertex, 3> triple{};           // r, b, g
  std::size_t common_neighbourhood = 0;     // |N(r) & N(b) & N(g)| in G
  std::size_t x_rbg = 0;                    // size of the largest pattern class
  std::array<Colour, 3> pattern{};          // colours r, b, g send into X_rbg
  std::size_t outside = 0;                  // |V \ (X_rbg + N(X_rbg))|
  std::optional<Vertex> y;                  // first vertex outside, if any
  std::size_t x_yrbg = 0;
  std::optional<std::array<Colour, 3>> y_pattern;
  std::size_t pivot = 0;                    // 0, 1, 2 for r, b, g
  std::vector<ComponentRef> candidates;     // the five components
  std::vector<ComponentRef> winner;
};

struct Alpha2Trace {
  Colour pivot = Colour::Red;
  std::size_t nu_l = 0;
  /// Maximum matching of L as (left component, right component) pairs.
  std::vector<std::pair<ComponentRef, ComponentRef>> matching;
  int case_number = 0;  // 0 when the Konig cover already has size <= 3
  bool reduced_to_case2 = false;
  std::optional<ComponentRef> r1;
  std::optional<ComponentRef> r2;
  /// The four matching edges in case order as (G_i, B_i).
  std::vector<std::pair<ComponentRef, ComponentRef>> case_edges;
  /// Witnesses j_1..j_5 of the sets J_1..J_5 (J_5 only in Case 3).
  std::array<std::optional<Vertex>, 5> j{};
  std::size_t candidates_tested = 0;
  std::vector<ComponentRef> winner;
};

struct TraceReport {
  AlphaClass alpha;
  Branch branch = Branch::ExactFallback;
  std::optional<AlphaGe3Trace> alpha_ge3;
  std::optional<Alpha2Trace> alpha2;
  /// Cover produced by the branch strategy, when it succeeded.
  std::optional<std::vector<ComponentRef>> strategy_cover;
  std::optional<std::size_t> exact_size;
  std::size_t hypergraph_vertices = 0;
  /// "strategy" or "exact": which cover was turned into trees.
  std::string source;
  std::vector<ComponentRef> chosen;
  std::vector<std::string> notes;
};

struct SolverConfig {
  /// The exact oracle always runs when the hypergraph has at most this many
  /// vertices (components); above it only when the strategy fails.
  std::size_t exact_threshold = 400;
  /// Part used as the pivot of the link-graph union.
  Colour link_pivot = Colour::Red;
};

struct Solution {
  TreeCover cover;
  TraceReport trace;
};

/// Full pipeline. The returned cover has passed verify_cover.
Solution solve_cover(const ColouredGraph& cg, const SolverConfig& config = {});

struct StrategyOutcome {
  std::optional<std::vector<ComponentRef>> cover;
  std::vector<std::string> notes;
};

/// One or two components of F covering V(F). Requires F complete
/// (PreconditionError); throws InternalError if no pair exists.
std::vector<ComponentRef> egp_partition_search(const ShortcutGraph& f);

/**
 * Independence number at least three. Groups the common G-neighbourhood of
 * (r, b, g) by the colours it receives, takes the largest class X_rbg, finds
 * which of r, b, g keeps its colour towards X_yrbg for the first vertex y
 * outside X_rbg + N(X_rbg), and tests the ten triples of the five resulting
 * components. `labelling` must be the component labelling of `cg`.
 */
StrategyOutcome strategy_alpha_ge3(const ColouredGraph& cg, const ShortcutGraph& f,
                                   const std::array<Vertex, 3>& triple,
                                   const ComponentLabelling& labelling, AlphaGe3Trace* trace = nullptr);

/**
 * Independence number two. Lifts the Konig cover of the link union when
 * nu(L) <= 3, otherwise classifies four matching edges by their pivot
 * components and tests the candidate covers of the matching case.
 */
StrategyOutcome strategy_alpha2(const ColouredGraph& cg, const ShortcutGraph& f, const ComponentHypergraph& h,
                                const ComponentLabelling& labelling, Colour pivot = Colour::Red,
                                Alpha2Trace* trace = nullptr);

}  // namespace monotree

#endif  // MONOTREE_SOLVER_HPP_
