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

#include "monotree/hypergraph.hpp"

#include <algorithm>
#include <map>

#include "monotree/errors.hpp"

namespace monotree {

ComponentHypergraph build_component_hypergraph(const ComponentLabelling& labelling) {
  ComponentHypergraph h;
  const std::size_t n = labelling.num_vertices();
  h.graph_order_ = n;
  h.offsets_[0] = 0;
  for (Colour c : kColours) {
    const ColourPartition& part = labelling[c];
    h.parts_[index(c)] = part.ids();
    h.slot_by_id_[index(c)].assign(n, ColourPartition::npos);
    for (std::size_t s = 0; s < part.ids().size(); ++s) h.slot_by_id_[index(c)][part.ids()[s]] = s;
    h.offsets_[index(c) + 1] = h.offsets_[index(c)] + part.num_components();
  }
  // Increasing v keeps the smallest witness per triple.
  std::map<std::array<Vertex, kNumColours>, Vertex> triples;
  for (Vertex v = 0; v < n; ++v) {
    std::array<Vertex, kNumColours> ids{};
    for (Colour c : kColours) ids[index(c)] = labelling[c].id_of(v);
    triples.emplace(ids, v);
  }
  h.edges_.reserve(triples.size());
  for (const auto& [ids, witness] : triples) h.edges_.push_back({ids, witness});
  return h;
}

ComponentRef ComponentHypergraph::vertex(std::size_t idx) const {
  for (Colour c : kColours)
    if (idx < offsets_[index(c) + 1]) return {c, parts_[index(c)][idx - offsets_[index(c)]]};
  throw PreconditionError("hypergraph vertex index out of range");
}

std::size_t ComponentHypergraph::index_of(ComponentRef ref) const {
  const auto& slots = slot_by_id_[index(ref.colour)];
  if (ref.id >= slots.size() || slots[ref.id] == ColourPartition::npos)
    throw PreconditionError("not a component of this hypergraph");
  return offsets_[index(ref.colour)] + slots[ref.id];
}

std::array<std::size_t, kNumColours> ComponentHypergraph::edge_vertices(std::size_t e) const {
  std::array<std::size_t, kNumColours> out{};
  for (Colour c : kColours) out[index(c)] = index_of(edges_[e].component(c));
  return out;
}

namespace {

using Triple = std::array<std::size_t, kNumColours>;

std::vector<Triple> dense_edges(const ComponentHypergraph& h) {
  std::vector<Triple> out(h.num_edges());
  for (std::size_t e = 0; e < h.num_edges(); ++e) out[e] = h.edge_vertices(e);
  return out;
}

/// Depth-bounded search for a vertex cover of size <= budget. Branches on the
/// uncovered hyperedge with the fewest allowed vertices; the i-th branch
/// forbids the vertices tried by branches 0..i-1, so every cover set is
/// reached at most once.
class CoverSearch {
 public:
  CoverSearch(std::size_t num_vertices, std::vector<Triple> edges)
      : edges_(std::move(edges)), in_cover_(num_vertices, false), forbidden_(num_vertices, false),
        mark_(num_vertices, 0) {}

  /// Size of a greedy set of pairwise disjoint uncovered hyperedges.
  std::size_t lower_bound() {
    ++stamp_;
    std::size_t lb = 0;
    for (const Triple& t : edges_) {
      if (covered(t)) continue;
      if (mark_[t[0]] == stamp_ || mark_[t[1]] == stamp_ || mark_[t[2]] == stamp_) continue;
      for (std::size_t v : t) mark_[v] = stamp_;
      ++lb;
    }
    return lb;
  }

  bool search(std::size_t budget) {
    const Triple* pick = nullptr;
    std::size_t best_allowed = 4;
    for (const Triple& t : edges_) {
      if (covered(t)) continue;
      std::size_t allowed = 0;
      for (std::size_t v : t) allowed += forbidden_[v] ? 0 : 1;
      if (allowed == 0) return false;
      if (allowed < best_allowed) {
        best_allowed = allowed;
        pick = &t;
      }
    }
    if (pick == nullptr) return true;
    if (budget == 0 || lower_bound() > budget) return false;
    const Triple branch = *pick;
    std::vector<std::size_t> newly_forbidden;
    bool found = false;
    for (std::size_t v : branch) {
      if (forbidden_[v]) continue;
      in_cover_[v] = true;
      chosen_.push_back(v);
      if (search(budget - 1)) {
        found = true;
        break;
      }
      chosen_.pop_back();
      in_cover_[v] = false;
      forbidden_[v] = true;
      newly_forbidden.push_back(v);
    }
    for (std::size_t v : newly_forbidden) forbidden_[v] = false;
    return found;
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  bool covered(const Triple& t) const { return in_cover_[t[0]] || in_cover_[t[1]] || in_cover_[t[2]]; }

  std::vector<Triple> edges_;
  std::vector<bool> in_cover_;
  std::vector<bool> forbidden_;
  std::vector<std::size_t> mark_;
  std::size_t stamp_ = 0;
  std::vector<std::size_t> chosen_;
};

class MatchingSearch {
 public:
  MatchingSearch(std::size_t num_vertices, std::vector<Triple> edges)
      : edges_(std::move(edges)), used_(num_vertices, false), mark_(num_vertices, 0) {}

  MatchingCertificate run() {
    recurse(0);
    MatchingCertificate m;
    m.members = best_;
    return m;
  }

 private:
  bool compatible(const Triple& t) const { return !used_[t[0]] && !used_[t[1]] && !used_[t[2]]; }

  // Remaining hyperedges that can still be added, capped per part by the
  // number of distinct free vertices they touch.
  std::size_t upper_bound(std::size_t from) {
    ++stamp_;
    std::size_t edges = 0;
    std::array<std::size_t, kNumColours> distinct{};
    for (std::size_t e = from; e < edges_.size(); ++e) {
      const Triple& t = edges_[e];
      if (!compatible(t)) continue;
      ++edges;
      for (std::size_t c = 0; c < kNumColours; ++c) {
        if (mark_[t[c]] != stamp_) {
          mark_[t[c]] = stamp_;
          ++distinct[c];
        }
      }
    }
    return std::min({edges, distinct[0], distinct[1], distinct[2]});
  }

  void recurse(std::size_t from) {
    if (current_.size() > best_.size()) best_ = current_;
    if (from >= edges_.size()) return;
    if (current_.size() + upper_bound(from) <= best_.size()) return;
    const Triple& t = edges_[from];
    if (compatible(t)) {
      for (std::size_t v : t) used_[v] = true;
      current_.push_back(from);
      recurse(from + 1);
      current_.pop_back();
      for (std::size_t v : t) used_[v] = false;
    }
    recurse(from + 1);
  }

  std::vector<Triple> edges_;
  std::vector<bool> used_;
  std::vector<std::size_t> mark_;
  std::size_t stamp_ = 0;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::optional<CoverCertificate> tau_exact(const ComponentHypergraph& h, std::size_t k_max) {
  CoverSearch search(h.num_vertices(), dense_edges(h));
  for (std::size_t k = search.lower_bound(); k <= k_max; ++k) {
    if (search.search(k)) {
      CoverCertificate c;
      c.cover = search.chosen();
      std::sort(c.cover.begin(), c.cover.end());
      c.method = CoverMethod::Exact;
      return c;
    }
    if (k == kUnbounded) break;
  }
  return std::nullopt;
}

MatchingCertificate nu_exact(const ComponentHypergraph& h) {
  return MatchingSearch(h.num_vertices(), dense_edges(h)).run();
}

std::array<Colour, 2> link_sides(Colour pivot) {
  std::array<Colour, 2> sides{};
  std::size_t i = 0;
  for (Colour c : kColours)
    if (c != pivot) sides[i++] = c;
  return sides;
}

BipartiteGraph link_union(const ComponentHypergraph& h, Colour pivot) {
  const auto [left_colour, right_colour] = link_sides(pivot);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> origin;
  for (const Hyperedge& e : h.edges()) {
    const std::size_t l = h.slot_of(e.component(left_colour));
    const std::size_t r = h.slot_of(e.component(right_colour));
    auto& o = origin[{l, r}];
    const std::size_t s = h.slot_of(e.component(pivot));
    if (std::find(o.begin(), o.end(), s) == o.end()) o.push_back(s);
  }
  BipartiteGraph g;
  g.left = h.part(left_colour).size();
  g.right = h.part(right_colour).size();
  for (auto& [lr, o] : origin) {
    g.edges.push_back({lr.first, lr.second});
    std::sort(o.begin(), o.end());
    g.origin.push_back(std::move(o));
  }
  return g;
}

std::vector<Vertex> matching_to_independent_set(const ComponentHypergraph& h, const MatchingCertificate& m) {
  std::vector<Vertex> out;
  out.reserve(m.size());
  for (std::size_t e : m.members) out.push_back(h.edges().at(e).witness);
  return out;
}

bool is_vertex_cover(const ComponentHypergraph& h, const CoverCertificate& c) {
  std::vector<bool> in(h.num_vertices(), false);
  for (std::size_t v : c.cover) {
    if (v >= in.size()) return false;
    in[v] = true;
  }
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto t = h.edge_vertices(e);
    if (!in[t[0]] && !in[t[1]] && !in[t[2]]) return false;
  }
  return true;
}

bool is_matching(const ComponentHypergraph& h, const MatchingCertificate& m) {
  std::vector<bool> used(h.num_vertices(), false);
  for (std::size_t e : m.members) {
    if (e >= h.num_edges()) return false;
    for (std::size_t v : h.edge_vertices(e)) {
      if (used[v]) return false;
      used[v] = true;
    }
  }
  return true;
}

std::vector<ComponentRef> cover_components(const ComponentHypergraph& h, const CoverCertificate& c) {
  std::vector<ComponentRef> out;
  out.reserve(c.size());
  for (std::size_t v : c.cover) out.push_back(h.vertex(v));
  return out;
}

}  // namespace monotree
