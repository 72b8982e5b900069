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

#ifndef MONOTREE_GRAPH_HPP_
#define MONOTREE_GRAPH_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monotree/bitset.hpp"
#include "monotree/colour.hpp"
#include "monotree/random.hpp"

namespace monotree {

using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct ColouredEdge {
  Vertex u;
  Vertex v;
  Colour colour;
  friend bool operator==(const ColouredEdge&, const ColouredEdge&) = default;
};

/// Simple undirected graph on [0, n) with one adjacency bit row per vertex.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adjacency_(n, Bitset(n)) {}

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const;

  /// Throws PreconditionError on a self-loop or out-of-range endpoint.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }
  const Bitset& neighbours(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_complete() const;

  /// Rows must be symmetric and irreflexive (PreconditionError).
  static SimpleGraph from_rows(std::vector<Bitset> rows);

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<Bitset> adjacency_;
};

/**
 * A simple graph together with a 3-colouring of its edges. Every edge carries
 * exactly one colour; the per-colour adjacency rows are kept alongside the
 * uncoloured ones so colour classes can be intersected directly.
 */
class ColouredGraph {
 public:
  ColouredGraph() = default;
  explicit ColouredGraph(std::size_t n);

  std::size_t num_vertices() const { return graph_.num_vertices(); }
  std::size_t num_edges() const { return graph_.num_edges(); }

  /// Adds uv with colour c. Re-adding with the same colour is a no-op; a
  /// different colour, a self-loop or an out-of-range endpoint throws
  /// PreconditionError.
  void add_edge(Vertex u, Vertex v, Colour c);

  const SimpleGraph& graph() const { return graph_; }
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  std::optional<Colour> colour(Vertex u, Vertex v) const;
  const Bitset& neighbours(Vertex v) const { return graph_.neighbours(v); }
  const Bitset& neighbours(Vertex v, Colour c) const { return colour_rows_[index(c)][v]; }

  std::vector<ColouredEdge> edges() const;

  /// Builds from per-colour adjacency rows. Rows must be symmetric,
  /// irreflexive and pairwise disjoint across colours (PreconditionError).
  static ColouredGraph from_colour_rows(std::array<std::vector<Bitset>, kNumColours> rows);

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  SimpleGraph graph_;
  std::array<std::vector<Bitset>, kNumColours> colour_rows_;
};

/// Erdos-Renyi G(n, p). Geometric skipping below p = 0.1, per-pair
/// Bernoulli trials otherwise. Throws ParameterError if p is outside [0, 1].
SimpleGraph generate_gnp(std::size_t n, double p, Seed seed);

/// Each edge gets a uniformly random colour, in lexicographic edge order.
ColouredGraph colour_random(const SimpleGraph& g, Seed seed);

/// Same as colour_random but restricted to the first `num_colours` colours.
ColouredGraph colour_random(const SimpleGraph& g, Seed seed, std::size_t num_colours);

/// Edges at x1, x2, x3 get Red, Green, Blue respectively; every other edge
/// gets `base`. The three vertices must be distinct and pairwise non-adjacent.
ColouredGraph colour_three_stars(const SimpleGraph& g, Vertex x1, Vertex x2, Vertex x3,
                                 Colour base);

/// Lexicographically smallest pairwise non-adjacent triple of g, if any.
std::optional<std::array<Vertex, 3>> find_independent_triple(const SimpleGraph& g);

// Text interchange format:
//   n <count>
//   u v c        (0 <= u < v < count, c in {r, g, b})
// Lines starting with '#' and blank lines are ignored.
ColouredGraph read_coloured_graph(std::istream& in);
void write_coloured_graph(std::ostream& out, const ColouredGraph& cg);
ColouredGraph load(const std::filesystem::path& path);
void store(const std::filesystem::path& path, const ColouredGraph& cg);

}  // namespace monotree

#endif  // MONOTREE_GRAPH_HPP_
