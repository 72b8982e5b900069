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

#include <deque>
#include <string>

#include "monotree/errors.hpp"
#include "monotree/solver.hpp"

namespace monotree {

std::vector<Vertex> Tree::vertices() const {
  std::vector<Vertex> out;
  out.reserve(parent.size());
  for (const auto& [v, p] : parent) out.push_back(v);
  return out;
}

Verdict verify_cover(const ColouredGraph& cg, const TreeCover& tc) {
  Verdict verdict;
  const std::size_t n = cg.num_vertices();
  auto report = [&](Violation::Kind kind, std::size_t t, Vertex v, std::string msg) {
    verdict.violations.push_back({kind, t, v, std::move(msg)});
  };
  Bitset covered(n);
  for (std::size_t t = 0; t < tc.trees.size(); ++t) {
    const Tree& tree = tc.trees[t];
    const std::string where = "tree " + std::to_string(t) + ": ";
    auto root_it = tree.parent.find(tree.root);
    if (tree.root >= n || root_it == tree.parent.end() || root_it->second != tree.root) {
      report(Violation::Kind::BadRoot, t, tree.root, where + "root " + std::to_string(tree.root) + " is not its own parent");
      continue;
    }
    bool structurally_sound = true;
    for (const auto& [v, p] : tree.parent) {
      if (v >= n) {
        report(Violation::Kind::BadParent, t, v, where + "vertex " + std::to_string(v) + " out of range");
        structurally_sound = false;
        continue;
      }
      covered.set(v);
      if (v == tree.root) continue;
      if (p == v) {
        report(Violation::Kind::Cycle, t, v, where + "vertex " + std::to_string(v) + " is its own parent");
        structurally_sound = false;
        continue;
      }
      if (!tree.parent.contains(p)) {
        report(Violation::Kind::BadParent, t, v,
               where + "parent " + std::to_string(p) + " of " + std::to_string(v) + " is not in the tree");
        structurally_sound = false;
        continue;
      }
      const auto colour = p < n ? cg.colour(v, p) : std::nullopt;
      if (!colour) {
        report(Violation::Kind::MissingEdge, t, v,
               where + "missing edge " + std::to_string(v) + "-" + std::to_string(p));
      } else if (*colour != tree.colour) {
        report(Violation::Kind::WrongColour, t, v,
               where + "edge " + std::to_string(v) + "-" + std::to_string(p) + " is " +
                   std::string(colour_name(*colour)) + ", tree is " + std::string(colour_name(tree.colour)));
      }
    }
    if (!structurally_sound) continue;
    // Every vertex must reach the root within |T| parent steps.
    for (const auto& [v, p] : tree.parent) {
      Vertex cur = v;
      std::size_t steps = 0;
      while (cur != tree.root && steps <= tree.parent.size()) {
        cur = tree.parent.at(cur);
        ++steps;
      }
      if (cur != tree.root) {
        report(Violation::Kind::Cycle, t, v, where + "vertex " + std::to_string(v) + " lies on a cycle");
        break;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!covered.test(v)) report(Violation::Kind::UncoveredVertex, 0, v, "uncovered vertex " + std::to_string(v));
  return verdict;
}

TreeCover components_to_trees(const ColouredGraph& cg, const std::vector<ComponentRef>& comps) {
  const std::size_t n = cg.num_vertices();
  TreeCover tc;
  Bitset covered(n);
  for (const ComponentRef& ref : comps) {
    if (ref.id >= n) throw ContractError("component id " + std::to_string(ref.id) + " out of range");
    Tree tree;
    tree.colour = ref.colour;
    tree.root = ref.id;
    tree.parent[ref.id] = ref.id;
    std::deque<Vertex> queue{ref.id};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const Bitset& row = cg.neighbours(u, ref.colour);
      for (Vertex v = row.find_first(); v < n; v = row.find_next(v + 1)) {
        if (tree.parent.emplace(v, u).second) queue.push_back(v);
      }
    }
    if (tree.parent.begin()->first != ref.id)
      throw ContractError("vertex " + std::to_string(ref.id) + " is not the smallest vertex of its " +
                          std::string(colour_name(ref.colour)) + " component");
    for (const auto& [v, p] : tree.parent) covered.set(v);
    tc.trees.push_back(std::move(tree));
  }
  if (!covered.all())
    throw ContractError("components leave vertex " + std::to_string(covered.find_first_clear()) + " uncovered");
  return tc;
}

}  // namespace monotree
