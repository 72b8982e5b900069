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

#include "monotree/components.hpp"

#include "monotree/errors.hpp"
#include "monotree/union_find.hpp"

namespace monotree {

ColourPartition::ColourPartition(std::vector<Vertex> label)
    : label_(std::move(label)), slot_(label_.size(), npos) {
  const std::size_t n = label_.size();
  for (Vertex v = 0; v < n; ++v) {
    if (label_[v] == v) {
      slot_[v] = ids_.size();
      ids_.push_back(v);
      members_.emplace_back(n);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (label_[v] >= n || slot_[label_[v]] == npos)
      throw PreconditionError("component label is not the smallest member");
    members_[slot_[label_[v]]].set(v);
  }
}

std::size_t ComponentLabelling::total_components() const {
  std::size_t total = 0;
  for (const auto& p : parts_) total += p.num_components();
  return total;
}

bool ComponentLabelling::is_component(ComponentRef ref) const {
  return parts_[index(ref.colour)].slot(ref.id) != ColourPartition::npos;
}

ComponentLabelling monochromatic_components(const ColouredGraph& cg) {
  const std::size_t n = cg.num_vertices();
  std::array<ColourPartition, kNumColours> parts;
  for (Colour c : kColours) {
    UnionFind uf(n);
    for (Vertex u = 0; u < n; ++u) {
      const Bitset& row = cg.neighbours(u, c);
      for (Vertex v = row.find_next(u + 1); v < n; v = row.find_next(v + 1)) uf.unite(u, v);
    }
    // Vertices are visited in increasing order, so the first one seen in a
    // class is its smallest member.
    std::vector<Vertex> root_label(n, n);
    std::vector<Vertex> label(n);
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t root = uf.find(v);
      if (root_label[root] == n) root_label[root] = v;
      label[v] = root_label[root];
    }
    parts[index(c)] = ColourPartition(std::move(label));
  }
  return ComponentLabelling(std::move(parts));
}

Bitset covered_vertices(const ComponentLabelling& labelling, const std::vector<ComponentRef>& comps) {
  Bitset covered(labelling.num_vertices());
  for (const ComponentRef& ref : comps) covered |= labelling.members(ref);
  return covered;
}

bool covers_all(const ComponentLabelling& labelling, const std::vector<ComponentRef>& comps) {
  return covered_vertices(labelling, comps).all();
}

ShortcutGraph shortcut_graph(const ColouredGraph& cg) {
  const std::size_t n = cg.num_vertices();
  const ComponentLabelling labelling = monochromatic_components(cg);
  std::array<std::vector<Bitset>, kNumColours> rows;
  for (auto& r : rows) r.assign(n, Bitset(n));
  for (Vertex v = 0; v < n; ++v) {
    std::array<Bitset, kNumColours> same;
    Bitset claimed = cg.neighbours(v);  // direct edges keep their own colour
    for (Colour c : kColours) {
      same[index(c)] = labelling.members(labelling.component_of(v, c));
      same[index(c)].reset(v);
    }
    for (Colour c : kColours) {
      Bitset row = same[index(c)] - claimed;
      row |= cg.neighbours(v, c);
      rows[index(c)][v] = row;
      claimed |= same[index(c)];
    }
  }
  return ShortcutGraph{ColouredGraph::from_colour_rows(std::move(rows)),
                       std::make_shared<const ColouredGraph>(cg)};
}

const char* to_string(AlphaClass::Kind kind) {
  switch (kind) {
    case AlphaClass::Kind::One:
      return "one";
    case AlphaClass::Kind::Two:
      return "two";
    case AlphaClass::Kind::ThreeOrMore:
      return "three_or_more";
  }
  return "?";
}

AlphaClass alpha_class(const SimpleGraph& f) {
  if (f.is_complete()) return {AlphaClass::Kind::One, std::nullopt};
  if (auto triple = find_independent_triple(f)) return {AlphaClass::Kind::ThreeOrMore, triple};
  return {AlphaClass::Kind::Two, std::nullopt};
}

}  // namespace monotree
