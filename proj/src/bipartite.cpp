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

#include "monotree/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "monotree/errors.hpp"

namespace monotree {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Adjacency {
  // For left vertex u: (right vertex, edge index) pairs in edge order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;

  explicit Adjacency(const BipartiteGraph& l) : out(l.left) {
    for (std::size_t e = 0; e < l.edges.size(); ++e) out[l.edges[e].left].push_back({l.edges[e].right, e});
  }
};

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& l)
      : l_(l), adj_(l), match_left_(l.left, kNone), match_right_(l.right, kNone),
        edge_of_left_(l.left, kNone), dist_(l.left), next_(l.left) {}

  MatchingCertificate run() {
    while (bfs()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::size_t u = 0; u < l_.left; ++u)
        if (match_left_[u] == kNone) dfs(u);
    }
    MatchingCertificate m;
    for (std::size_t u = 0; u < l_.left; ++u)
      if (edge_of_left_[u] != kNone) m.members.push_back(edge_of_left_[u]);
    std::sort(m.members.begin(), m.members.end());
    return m;
  }

 private:
  bool bfs() {
    std::vector<std::size_t> queue;
    bool found = false;
    for (std::size_t u = 0; u < l_.left; ++u) {
      if (match_left_[u] == kNone) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kNone;
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (auto [v, e] : adj_.out[u]) {
        const std::size_t w = match_right_[v];
        if (w == kNone) {
          found = true;
        } else if (dist_[w] == kNone) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (auto& i = next_[u]; i < adj_.out[u].size(); ++i) {
      auto [v, e] = adj_.out[u][i];
      const std::size_t w = match_right_[v];
      if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        edge_of_left_[u] = e;
        ++i;
        return true;
      }
    }
    dist_[u] = kNone;
    return false;
  }

  const BipartiteGraph& l_;
  Adjacency adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> edge_of_left_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> next_;
};

}  // namespace

BipartiteGraph BipartiteGraph::from_edges(std::size_t left, std::size_t right, std::vector<Edge> edges) {
  for (const Edge& e : edges)
    if (e.left >= left || e.right >= right)
      throw PreconditionError("bipartite edge endpoint outside its part");
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.left != b.left ? a.left < b.left : a.right < b.right;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  BipartiteGraph g;
  g.left = left;
  g.right = right;
  g.edges = std::move(edges);
  return g;
}

MatchingCertificate max_matching_bipartite(const BipartiteGraph& l) { return HopcroftKarp(l).run(); }

bool is_matching(const BipartiteGraph& l, const MatchingCertificate& m) {
  std::vector<bool> used_left(l.left, false);
  std::vector<bool> used_right(l.right, false);
  for (std::size_t e : m.members) {
    if (e >= l.edges.size()) return false;
    const auto& edge = l.edges[e];
    if (used_left[edge.left] || used_right[edge.right]) return false;
    used_left[edge.left] = true;
    used_right[edge.right] = true;
  }
  return true;
}

bool is_vertex_cover(const BipartiteGraph& l, const CoverCertificate& c) {
  std::vector<bool> in(l.left + l.right, false);
  for (std::size_t v : c.cover) {
    if (v >= in.size()) return false;
    in[v] = true;
  }
  return std::all_of(l.edges.begin(), l.edges.end(),
                     [&](const auto& e) { return in[e.left] || in[l.left + e.right]; });
}

CoverCertificate konig_cover(const BipartiteGraph& l, const MatchingCertificate& m) {
  if (!is_matching(l, m)) throw InternalError("konig_cover: certificate is not a matching");
  std::vector<std::size_t> match_left(l.left, kNone);
  std::vector<std::size_t> match_right(l.right, kNone);
  for (std::size_t e : m.members) {
    match_left[l.edges[e].left] = l.edges[e].right;
    match_right[l.edges[e].right] = l.edges[e].left;
  }
  const Adjacency adj(l);
  std::vector<bool> reached_left(l.left, false);
  std::vector<bool> reached_right(l.right, false);
  std::vector<std::size_t> queue;
  for (std::size_t u = 0; u < l.left; ++u) {
    if (match_left[u] == kNone) {
      reached_left[u] = true;
      queue.push_back(u);
    }
  }
  // Non-matching edges go left to right, matching edges right to left.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (auto [v, e] : adj.out[u]) {
      if (match_left[u] == v || reached_right[v]) continue;
      reached_right[v] = true;
      const std::size_t w = match_right[v];
      if (w == kNone)
        throw InternalError("konig_cover: matching is not maximum (augmenting path to right vertex " +
                            std::to_string(v) + ")");
      if (!reached_left[w]) {
        reached_left[w] = true;
        queue.push_back(w);
      }
    }
  }
  CoverCertificate cover;
  cover.method = CoverMethod::Konig;
  for (std::size_t u = 0; u < l.left; ++u)
    if (!reached_left[u]) cover.cover.push_back(u);
  for (std::size_t v = 0; v < l.right; ++v)
    if (reached_right[v]) cover.cover.push_back(l.left + v);
  if (cover.size() != m.size()) throw InternalError("konig_cover: cover size differs from matching size");
  return cover;
}

const char* to_string(CoverMethod method) {
  switch (method) {
    case CoverMethod::Exact:
      return "exact";
    case CoverMethod::Konig:
      return "konig";
    case CoverMethod::CaseAnalysis:
      return "case-analysis";
  }
  return "?";
}

}  // namespace monotree
