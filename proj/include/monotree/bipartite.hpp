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

#ifndef MONOTREE_BIPARTITE_HPP_
#define MONOTREE_BIPARTITE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "monotree/certificates.hpp"

namespace monotree {

/**
 * Bipartite graph with parts [0, left) and [0, right). In cover
 * certificates, left vertex i is numbered i and right vertex j is numbered
 * left + j.
 */
struct BipartiteGraph {
  struct Edge {
    std::size_t left;
    std::size_t right;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::size_t left = 0;
  std::size_t right = 0;
  /// Sorted by (left, right), no duplicates.
  std::vector<Edge> edges;
  /// Optional; when non-empty, origin[e] lists the pivot-part ids whose link
  /// graph contributed edge e.
  std::vector<std::vector<std::size_t>> origin;

  /// Sorts and deduplicates edges. Throws PreconditionError on an endpoint
  /// outside its part.
  static BipartiteGraph from_edges(std::size_t left, std::size_t right, std::vector<Edge> edges);
};

/// Maximum matching by Hopcroft-Karp; adjacency is scanned in edge order.
MatchingCertificate max_matching_bipartite(const BipartiteGraph& l);

/**
 * Minimum vertex cover from a maximum matching: with Z the vertices reachable
 * from unmatched left vertices by alternating paths, the cover is
 * (left \ Z) + (right & Z). Throws InternalError if `m` is not a matching or
 * admits an augmenting path.
 */
CoverCertificate konig_cover(const BipartiteGraph& l, const MatchingCertificate& m);

bool is_matching(const BipartiteGraph& l, const MatchingCertificate& m);
bool is_vertex_cover(const BipartiteGraph& l, const CoverCertificate& c);

}  // namespace monotree

#endif  // MONOTREE_BIPARTITE_HPP_
