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

#include "monotree/graph.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "monotree/errors.hpp"

namespace monotree {

namespace {

void check_endpoints(std::size_t n, Vertex u, Vertex v) {
  if (u >= n || v >= n)
    throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " +
                            std::to_string(v));
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
}

void check_symmetric(const std::vector<Bitset>& rows) {
  const std::size_t n = rows.size();
  for (Vertex u = 0; u < n; ++u) {
    if (rows[u].size() != n) throw PreconditionError("adjacency row has wrong size");
    if (rows[u].test(u)) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    for (Vertex v = rows[u].find_first(); v < n; v = rows[u].find_next(v + 1))
      if (!rows[v].test(u)) throw PreconditionError("adjacency rows are not symmetric");
  }
}

}  // namespace

std::size_t SimpleGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  check_endpoints(num_vertices(), u, v);
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  const std::size_t n = num_vertices();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = adjacency_[u].find_next(u + 1); v < n; v = adjacency_[u].find_next(v + 1))
      out.push_back({u, v});
  return out;
}

bool SimpleGraph::is_complete() const {
  const std::size_t n = num_vertices();
  for (Vertex v = 0; v < n; ++v)
    if (adjacency_[v].count() != n - 1) return false;
  return true;
}

SimpleGraph SimpleGraph::from_rows(std::vector<Bitset> rows) {
  check_symmetric(rows);
  SimpleGraph g;
  g.adjacency_ = std::move(rows);
  return g;
}

ColouredGraph::ColouredGraph(std::size_t n) : graph_(n) {
  for (auto& rows : colour_rows_) rows.assign(n, Bitset(n));
}

void ColouredGraph::add_edge(Vertex u, Vertex v, Colour c) {
  check_endpoints(num_vertices(), u, v);
  if (auto existing = colour(u, v)) {
    if (*existing != c)
      throw PreconditionError("edge " + std::to_string(u) + " " + std::to_string(v) +
                              " already coloured " + std::string(colour_name(*existing)));
    return;
  }
  graph_.add_edge(u, v);
  colour_rows_[index(c)][u].set(v);
  colour_rows_[index(c)][v].set(u);
}

std::optional<Colour> ColouredGraph::colour(Vertex u, Vertex v) const {
  if (!graph_.adjacent(u, v)) return std::nullopt;
  for (Colour c : kColours)
    if (colour_rows_[index(c)][u].test(v)) return c;
  return std::nullopt;
}

std::vector<ColouredEdge> ColouredGraph::edges() const {
  std::vector<ColouredEdge> out;
  for (const Edge& e : graph_.edges()) out.push_back({e.u, e.v, *colour(e.u, e.v)});
  return out;
}

ColouredGraph ColouredGraph::from_colour_rows(std::array<std::vector<Bitset>, kNumColours> rows) {
  const std::size_t n = rows[0].size();
  std::vector<Bitset> all(n, Bitset(n));
  for (const auto& colour_rows : rows) {
    if (colour_rows.size() != n) throw PreconditionError("colour classes disagree on vertex count");
    check_symmetric(colour_rows);
    for (Vertex v = 0; v < n; ++v) {
      if (all[v].intersects(colour_rows[v]))
        throw PreconditionError("edge at vertex " + std::to_string(v) + " has two colours");
      all[v] |= colour_rows[v];
    }
  }
  ColouredGraph cg;
  cg.graph_ = SimpleGraph::from_rows(std::move(all));
  cg.colour_rows_ = std::move(rows);
  return cg;
}

SimpleGraph generate_gnp(std::size_t n, double p, Seed seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterError("edge probability must lie in [0, 1], got " + std::to_string(p));
  SimpleGraph g(n);
  if (n < 2 || p == 0.0) return g;
  Rng rng(seed);
  if (p < 0.1) {
    // Walk the pairs u < v in lexicographic order and jump by geometric gaps;
    // (u, v) is the last visited pair, starting before (0, 1).
    const double log_q = std::log1p(-p);
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    while (true) {
      const double r = 1.0 - rng.uniform();  // (0, 1]
      const double gap = std::floor(std::log(r) / log_q);
      std::uint64_t col = v + 1 + (gap > 1e15 ? std::uint64_t{1} << 50 : static_cast<std::uint64_t>(gap));
      while (u + 1 < n && col >= n) {
        col -= n;
        ++u;
        col += u + 1;
      }
      if (u + 1 >= n) break;
      v = col;
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

ColouredGraph colour_random(const SimpleGraph& g, Seed seed) { return colour_random(g, seed, kNumColours); }

ColouredGraph colour_random(const SimpleGraph& g, Seed seed, std::size_t num_colours) {
  if (num_colours == 0 || num_colours > kNumColours)
    throw ParameterError("number of colours must be 1, 2 or 3");
  ColouredGraph cg(g.num_vertices());
  Rng rng(seed);
  for (const Edge& e : g.edges()) cg.add_edge(e.u, e.v, colour_at(rng.below(num_colours)));
  return cg;
}

ColouredGraph colour_three_stars(const SimpleGraph& g, Vertex x1, Vertex x2, Vertex x3,
                                 Colour base) {
  const std::size_t n = g.num_vertices();
  const std::array<Vertex, 3> xs = {x1, x2, x3};
  for (Vertex x : xs)
    if (x >= n) throw PreconditionError("star centre " + std::to_string(x) + " out of range");
  if (x1 == x2 || x1 == x3 || x2 == x3) throw PreconditionError("star centres must be distinct");
  if (g.adjacent(x1, x2) || g.adjacent(x1, x3) || g.adjacent(x2, x3))
    throw PreconditionError("star centres must be pairwise non-adjacent");
  ColouredGraph cg(n);
  for (const Edge& e : g.edges()) {
    Colour c = base;
    for (std::size_t i = 0; i < 3; ++i)
      if (e.u == xs[i] || e.v == xs[i]) c = colour_at(i);
    cg.add_edge(e.u, e.v, c);
  }
  return cg;
}

std::optional<std::array<Vertex, 3>> find_independent_triple(const SimpleGraph& g) {
  const std::size_t n = g.num_vertices();
  for (Vertex a = 0; a < n; ++a) {
    Bitset non_a = g.neighbours(a);
    non_a.flip();
    for (Vertex b = non_a.find_next(a + 1); b < n; b = non_a.find_next(b + 1)) {
      Bitset rest = non_a - g.neighbours(b);
      Vertex c = rest.find_next(b + 1);
      if (c < n) return std::array<Vertex, 3>{a, b, c};
    }
  }
  return std::nullopt;
}

ColouredGraph read_coloured_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<ColouredGraph> cg;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!cg) {
      std::string tag;
      long long count = -1;
      if (!(fields >> tag >> count) || tag != "n" || count < 0)
        throw ParseError(line_no, "expected header 'n <count>'");
      std::string extra;
      if (fields >> extra) throw ParseError(line_no, "trailing data after header");
      cg.emplace(static_cast<std::size_t>(count));
      continue;
    }
    long long u = -1;
    long long v = -1;
    std::string c;
    if (!(fields >> u >> v >> c) || c.size() != 1)
      throw ParseError(line_no, "expected edge 'u v c'");
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "trailing data after edge");
    const auto colour = colour_from_char(c[0]);
    if (!colour) throw ParseError(line_no, "unknown colour '" + c + "'");
    const auto n = static_cast<long long>(cg->num_vertices());
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex out of range");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u > v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    const auto uu = static_cast<Vertex>(u);
    const auto vv = static_cast<Vertex>(v);
    if (auto existing = cg->colour(uu, vv); existing && *existing != *colour)
      throw ParseError(line_no, "edge listed twice with different colours");
    cg->add_edge(uu, vv, *colour);
  }
  if (!cg) throw ParseError(line_no, "missing header 'n <count>'");
  return std::move(*cg);
}

void write_coloured_graph(std::ostream& out, const ColouredGraph& cg) {
  out << "n " << cg.num_vertices() << '\n';
  for (const ColouredEdge& e : cg.edges()) out << e.u << ' ' << e.v << ' ' << colour_char(e.colour) << '\n';
}

ColouredGraph load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_coloured_graph(in);
}

void store(const std::filesystem::path& path, const ColouredGraph& cg) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_coloured_graph(out, cg);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace monotree
