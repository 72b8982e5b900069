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

#include <string>

#include "monotree/errors.hpp"
#include "monotree/solver.hpp"

namespace monotree {

namespace {

using Pattern = std::array<Colour, 3>;

std::string format_pattern(const Pattern& p) {
  std::string s;
  for (Colour c : p) s += colour_char(c);
  return s;
}

struct PatternClasses {
  // Indexed by 9 * c0 + 3 * c1 + c2; only all-distinct patterns are filled.
  std::array<Bitset, 27> members;
  std::size_t repeated = 0;  // vertices whose pattern repeats a colour
};

/// Groups `pool` by the colours of its edges to the three `anchors`.
PatternClasses classify(const ColouredGraph& cg, const Bitset& pool, const std::array<Vertex, 3>& anchors) {
  PatternClasses out;
  for (auto& m : out.members) m = Bitset(cg.num_vertices());
  pool.for_each([&](std::size_t v) {
    Pattern p{};
    for (std::size_t i = 0; i < 3; ++i) p[i] = *cg.colour(v, anchors[i]);
    if (p[0] == p[1] || p[0] == p[2] || p[1] == p[2]) {
      ++out.repeated;
      return;
    }
    out.members[9 * index(p[0]) + 3 * index(p[1]) + index(p[2])].set(v);
  });
  return out;
}

/// Largest class; ties go to the smallest pattern in canonical order.
std::optional<std::pair<Pattern, const Bitset*>> largest(const PatternClasses& classes) {
  std::optional<std::pair<Pattern, const Bitset*>> best;
  std::size_t best_size = 0;
  for (std::size_t k = 0; k < classes.members.size(); ++k) {
    const std::size_t size = classes.members[k].count();
    if (size > best_size) {
      best_size = size;
      best = std::make_pair(Pattern{colour_at(k / 9), colour_at((k / 3) % 3), colour_at(k % 3)}, &classes.members[k]);
    }
  }
  return best;
}

}  // namespace

StrategyOutcome strategy_alpha_ge3(const ColouredGraph& cg, const ShortcutGraph& f,
                                   const std::array<Vertex, 3>& triple,
                                   const ComponentLabelling& labelling, AlphaGe3Trace* trace) {
  const auto [r, b, g] = triple;
  const std::size_t n = cg.num_vertices();
  if (r >= n || b >= n || g >= n || r == b || r == g || b == g)
    throw PreconditionError("alpha>=3 strategy needs three distinct vertices");
  if (f.base.adjacent(r, b) || f.base.adjacent(r, g) || f.base.adjacent(b, g))
    throw PreconditionError("alpha>=3 strategy needs a triple independent in F");

  StrategyOutcome out;
  AlphaGe3Trace local;
  AlphaGe3Trace& t = trace ? *trace : local;
  t = AlphaGe3Trace{};
  t.triple = triple;

  const Bitset common = cg.neighbours(r) & cg.neighbours(b) & cg.neighbours(g);
  t.common_neighbourhood = common.count();
  if (common.none()) {
    out.notes.push_back("alpha>=3: r, b, g have no common neighbour");
    return out;
  }
  const PatternClasses classes = classify(cg, common, triple);
  if (classes.repeated > 0)
    out.notes.push_back("alpha>=3: " + std::to_string(classes.repeated) +
                        " common neighbours repeat a colour (inconsistent with independence in F)");
  const auto main = largest(classes);
  if (!main) {
    out.notes.push_back("alpha>=3: no common neighbour with an all-distinct colour pattern");
    return out;
  }
  const Pattern pattern = main->first;
  const Bitset& x_rbg = *main->second;
  t.pattern = pattern;
  t.x_rbg = x_rbg.count();

  // X_rbg together with its neighbourhood.
  Bitset reached = x_rbg;
  x_rbg.for_each([&](std::size_t x) { reached |= cg.neighbours(x); });
  Bitset outside = reached;
  outside.flip();
  t.outside = outside.count();

  std::size_t pivot = 0;
  if (outside.any()) {
    const Vertex y = outside.find_first();
    t.y = y;
    const PatternClasses y_classes = classify(cg, common & cg.neighbours(y), triple);
    if (const auto y_main = largest(y_classes)) {
      const Pattern& yp = y_main->first;
      t.y_pattern = yp;
      t.x_yrbg = y_main->second->count();
      std::vector<std::size_t> keeps;
      for (std::size_t i = 0; i < 3; ++i)
        if (yp[i] == pattern[i]) keeps.push_back(i);
      if (keeps.size() == 1) {
        pivot = keeps.front();
      } else {
        out.notes.push_back("alpha>=3: X_yrbg pattern " + format_pattern(yp) + " keeps " +
                            std::to_string(keeps.size()) + " colours of " + format_pattern(pattern) +
                            "; pivot defaults to r");
      }
    } else {
      out.notes.push_back("alpha>=3: y=" + std::to_string(y) +
                          " has no all-distinct common neighbour with r, b, g; pivot defaults to r");
    }
  }
  t.pivot = pivot;

  // Components each anchor sends into X_rbg, then the two non-pivot anchors
  // with their colours exchanged.
  std::vector<ComponentRef> five;
  for (std::size_t i = 0; i < 3; ++i) five.push_back(labelling.component_of(triple[i], pattern[i]));
  std::array<std::size_t, 2> others{};
  for (std::size_t i = 0, k = 0; i < 3; ++i)
    if (i != pivot) others[k++] = i;
  five.push_back(labelling.component_of(triple[others[0]], pattern[others[1]]));
  five.push_back(labelling.component_of(triple[others[1]], pattern[others[0]]));
  t.candidates = five;

  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t k = j + 1; k < 5; ++k) {
        std::vector<ComponentRef> cand{five[i], five[j], five[k]};
        if (covers_all(labelling, cand)) {
          t.winner = cand;
          out.cover = std::move(cand);
          return out;
        }
      }
  out.notes.push_back("alpha>=3: none of the ten triples covers V(G)");
  return out;
}

}  // namespace monotree
