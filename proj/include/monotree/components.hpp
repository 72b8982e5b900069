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

#ifndef MONOTREE_COMPONENTS_HPP_
#define MONOTREE_COMPONENTS_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "monotree/bitset.hpp"
#include "monotree/colour.hpp"
#include "monotree/graph.hpp"

namespace monotree {

/// A monochromatic component, named by its colour and its smallest vertex.
struct ComponentRef {
  Colour colour;
  Vertex id;

  friend auto operator<=>(const ComponentRef&, const ComponentRef&) = default;
};

/// Partition of [n] into the components of one colour class.
class ColourPartition {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ColourPartition() = default;
  /// `label[v]` must be the smallest vertex of v's class.
  explicit ColourPartition(std::vector<Vertex> label);

  std::size_t num_vertices() const { return label_.size(); }
  std::size_t num_components() const { return ids_.size(); }

  Vertex id_of(Vertex v) const { return label_[v]; }
  /// Component ids in increasing order.
  const std::vector<Vertex>& ids() const { return ids_; }
  /// Position of a component id within ids(), or npos if `id` is not one.
  std::size_t slot(Vertex id) const { return id < slot_.size() ? slot_[id] : npos; }
  const Bitset& members(Vertex id) const { return members_[slot_[id]]; }
  const Bitset& members_at(std::size_t slot) const { return members_[slot]; }

  friend bool operator==(const ColourPartition& a, const ColourPartition& b) {
    return a.label_ == b.label_;
  }

 private:
  std::vector<Vertex> label_;
  std::vector<Vertex> ids_;
  std::vector<std::size_t> slot_;
  std::vector<Bitset> members_;
};

/// Per-colour monochromatic components, singletons included.
class ComponentLabelling {
 public:
  ComponentLabelling() = default;
  explicit ComponentLabelling(std::array<ColourPartition, kNumColours> parts)
      : parts_(std::move(parts)) {}

  std::size_t num_vertices() const { return parts_[0].num_vertices(); }
  std::size_t total_components() const;

  const ColourPartition& operator[](Colour c) const { return parts_[index(c)]; }
  ComponentRef component_of(Vertex v, Colour c) const { return {c, parts_[index(c)].id_of(v)}; }
  const Bitset& members(ComponentRef ref) const { return parts_[index(ref.colour)].members(ref.id); }
  bool is_component(ComponentRef ref) const;

  friend bool operator==(const ComponentLabelling&, const ComponentLabelling&) = default;

 private:
  std::array<ColourPartition, kNumColours> parts_;
};

ComponentLabelling monochromatic_components(const ColouredGraph& cg);

/// Union of the member sets of `comps`.
Bitset covered_vertices(const ComponentLabelling& labelling, const std::vector<ComponentRef>& comps);
bool covers_all(const ComponentLabelling& labelling, const std::vector<ComponentRef>& comps);

/**
 * Shortcut graph F of (G, phi): uv is an edge iff u and v lie in a common
 * monochromatic component of G. Edges of G keep their colour; every other
 * edge takes the smallest colour whose class connects its endpoints. With
 * this rule each colour class of G is a subgraph of the same colour class of
 * F, so both have the same component partitions.
 */
struct ShortcutGraph {
  ColouredGraph base;
  std::shared_ptr<const ColouredGraph> source;
};

ShortcutGraph shortcut_graph(const ColouredGraph& cg);

/// Independence number of F, resolved only as 1, 2 or at least 3.
struct AlphaClass {
  enum class Kind { One, Two, ThreeOrMore };

  Kind kind = Kind::One;
  /// Set iff kind == ThreeOrMore: the lexicographically smallest independent triple.
  std::optional<std::array<Vertex, 3>> witness;

  friend bool operator==(const AlphaClass&, const AlphaClass&) = default;
};

const char* to_string(AlphaClass::Kind kind);

AlphaClass alpha_class(const SimpleGraph& f);
inline AlphaClass alpha_class(const ShortcutGraph& f) { return alpha_class(f.base.graph()); }

}  // namespace monotree

#endif  // MONOTREE_COMPONENTS_HPP_
