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

#ifndef MONOTREE_HYPERGRAPH_HPP_
#define MONOTREE_HYPERGRAPH_HPP_

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "monotree/bipartite.hpp"
#include "monotree/certificates.hpp"
#include "monotree/colour.hpp"
#include "monotree/components.hpp"
#include "monotree/graph.hpp"

namespace monotree {

/// One hyperedge: a red, green and blue component sharing the witness vertex.
struct Hyperedge {
  std::array<Vertex, kNumColours> ids;  // component ids indexed by colour
  Vertex witness;                       // smallest vertex lying in all three

  ComponentRef component(Colour c) const { return {c, ids[index(c)]}; }
};

/**
 * 3-partite 3-uniform hypergraph whose vertices are the monochromatic
 * components and whose hyperedges are the component triples through each
 * graph vertex, deduplicated. Hypergraph vertices are numbered densely:
 * red components first, then green, then blue, each in increasing id order.
 */
class ComponentHypergraph {
 public:
  ComponentHypergraph() = default;

  std::size_t num_vertices() const { return offsets_[kNumColours]; }
  std::size_t num_edges() const { return edges_.size(); }
  /// Number of vertices of the underlying graph.
  std::size_t graph_order() const { return graph_order_; }

  const std::vector<Vertex>& part(Colour c) const { return parts_[index(c)]; }
  /// Hyperedges sorted by (red, green, blue) ids.
  const std::vector<Hyperedge>& edges() const { return edges_; }

  ComponentRef vertex(std::size_t idx) const;
  std::size_t index_of(ComponentRef ref) const;
  /// Position of `ref` within part(ref.colour).
  std::size_t slot_of(ComponentRef ref) const { return index_of(ref) - offsets_[index(ref.colour)]; }
  std::array<std::size_t, kNumColours> edge_vertices(std::size_t e) const;

  friend ComponentHypergraph build_component_hypergraph(const ComponentLabelling& labelling);

 private:
  std::size_t graph_order_ = 0;
  std::array<std::vector<Vertex>, kNumColours> parts_;
  std::array<std::vector<std::size_t>, kNumColours> slot_by_id_;
  std::array<std::size_t, kNumColours + 1> offsets_{};
  std::vector<Hyperedge> edges_;
};

ComponentHypergraph build_component_hypergraph(const ComponentLabelling& labelling);

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// Minimum vertex cover if tau(H) <= k_max, else nullopt. Exact.
std::optional<CoverCertificate> tau_exact(const ComponentHypergraph& h, std::size_t k_max);
inline CoverCertificate tau_exact(const ComponentHypergraph& h) { return *tau_exact(h, kUnbounded); }

/// Maximum matching of hyperedges. Exact.
MatchingCertificate nu_exact(const ComponentHypergraph& h);

/**
 * Union of the link graphs of all components of colour `pivot`. Left part is
 * the first remaining colour in canonical order, right part the second (for
 * the default red pivot: green on the left, blue on the right); indices are
 * slots within h.part(). origin lists pivot-part slots.
 */
BipartiteGraph link_union(const ComponentHypergraph& h, Colour pivot = Colour::Red);

/// The two non-pivot colours in canonical order.
std::array<Colour, 2> link_sides(Colour pivot);

/// Witness vertices of the matched hyperedges, in matching order.
std::vector<Vertex> matching_to_independent_set(const ComponentHypergraph& h,
                                                const MatchingCertificate& m);

bool is_vertex_cover(const ComponentHypergraph& h, const CoverCertificate& c);
bool is_matching(const ComponentHypergraph& h, const MatchingCertificate& m);

/// Components named by a hypergraph cover certificate.
std::vector<ComponentRef> cover_components(const ComponentHypergraph& h, const CoverCertificate& c);

}  // namespace monotree

#endif  // MONOTREE_HYPERGRAPH_HPP_
