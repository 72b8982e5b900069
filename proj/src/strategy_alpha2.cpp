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

#include <algorithm>
#include <map>
#include <string>

#include "monotree/errors.hpp"
#include "monotree/solver.hpp"

namespace monotree {

namespace {

/// Pivot / left / right roles; with the default red pivot these are the
/// red, green and blue parts.
struct Roles {
  Colour pivot;
  Colour left;
  Colour right;
};

/// A link-graph edge (left slot, right slot) with the pivot slot it is
/// assigned to.
struct RoutedEdge {
  std::size_t left;
  std::size_t right;
  std::size_t pivot;
};

class CaseAnalysis {
 public:
  CaseAnalysis(const ComponentHypergraph& h, const ComponentLabelling& labelling, Roles roles, Alpha2Trace& trace)
      : h_(h), labelling_(labelling), roles_(roles), trace_(trace) {
    for (const Hyperedge& e : h.edges()) witness_[e.ids] = e.witness;
  }

  ComponentRef pivot_ref(std::size_t slot) const { return {roles_.pivot, h_.part(roles_.pivot)[slot]}; }
  ComponentRef left_ref(std::size_t slot) const { return {roles_.left, h_.part(roles_.left)[slot]}; }
  ComponentRef right_ref(std::size_t slot) const { return {roles_.right, h_.part(roles_.right)[slot]}; }

  std::optional<Vertex> witness(std::size_t pivot, std::size_t left, std::size_t right) const {
    std::array<Vertex, kNumColours> ids{};
    ids[index(roles_.pivot)] = h_.part(roles_.pivot)[pivot];
    ids[index(roles_.left)] = h_.part(roles_.left)[left];
    ids[index(roles_.right)] = h_.part(roles_.right)[right];
    auto it = witness_.find(ids);
    if (it == witness_.end()) return std::nullopt;
    return it->second;
  }

  /// Records case edges and J-witnesses for four routed edges.
  void record(const std::array<RoutedEdge, 4>& edges) {
    trace_.case_edges.clear();
    for (std::size_t i = 0; i < 4; ++i) {
      trace_.case_edges.push_back({left_ref(edges[i].left), right_ref(edges[i].right)});
      trace_.j[i] = witness(edges[i].pivot, edges[i].left, edges[i].right);
    }
  }

  std::optional<std::vector<ComponentRef>> first_cover(const std::vector<std::vector<ComponentRef>>& candidates) {
    for (const auto& cand : candidates) {
      ++trace_.candidates_tested;
      if (covers_all(labelling_, cand)) {
        std::vector<ComponentRef> unique = cand;
        std::sort(unique.begin(), unique.end());
        unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
        trace_.winner = unique;
        return unique;
      }
    }
    return std::nullopt;
  }

  // Edges 1, 2 on R1 and 3, 4 on R2.
  std::optional<std::vector<ComponentRef>> case1(const std::array<RoutedEdge, 4>& e, std::size_t r1, std::size_t r2) {
    record(e);
    const ComponentRef R1 = pivot_ref(r1);
    const ComponentRef R2 = pivot_ref(r2);
    std::vector<std::vector<ComponentRef>> candidates;
    for (const RoutedEdge& edge : e) {
      candidates.push_back({R1, R2, right_ref(edge.right)});
      candidates.push_back({R1, R2, left_ref(edge.left)});
    }
    return first_cover(candidates);
  }

  // Edges 1, 2, 3 on R1 and 4 on R2.
  std::optional<std::vector<ComponentRef>> case2(const std::array<RoutedEdge, 4>& e, std::size_t r1, std::size_t r2) {
    record(e);
    const ComponentRef R1 = pivot_ref(r1);
    const ComponentRef R2 = pivot_ref(r2);
    const ComponentRef B4 = right_ref(e[3].right);
    const ComponentRef G4 = left_ref(e[3].left);
    std::vector<std::vector<ComponentRef>> candidates;
    for (std::size_t s = 0; s < h_.part(roles_.pivot).size(); ++s) candidates.push_back({R1, R2, pivot_ref(s)});
    candidates.push_back({R1, B4, G4});
    candidates.push_back({R1, R2, B4});
    candidates.push_back({R1, R2, G4});
    return first_cover(candidates);
  }

  // All four edges on R1.
  std::optional<std::vector<ComponentRef>> case3(const std::array<RoutedEdge, 4>& e, std::size_t r1) {
    record(e);
    struct Split {
      std::size_t r2;
      std::size_t left;
      std::size_t right;
    };
    std::optional<Split> j5_split;
    std::optional<std::size_t> j5_k;  // matching edge sharing the left part (G_4)
    std::optional<std::size_t> j5_j;  // matching edge sharing the right part (B_3)
    bool other_pivot = false;
    for (const Hyperedge& he : h_.edges()) {
      const std::size_t r2 = h_.slot_of(he.component(roles_.pivot));
      if (r2 == r1) continue;
      other_pivot = true;
      const std::size_t gl = h_.slot_of(he.component(roles_.left));
      const std::size_t br = h_.slot_of(he.component(roles_.right));
      auto k_it = std::find_if(e.begin(), e.end(), [&](const RoutedEdge& x) { return x.left == gl; });
      std::array<RoutedEdge, 4> rerouted{};
      std::size_t kept = 0;
      if (k_it == e.end()) {
        // Three matching edges avoid the right part of (gl, br).
        for (const RoutedEdge& x : e)
          if (x.right != br && kept < 3) rerouted[kept++] = x;
      } else {
        const bool clash = std::any_of(e.begin(), e.end(), [&](const RoutedEdge& x) {
          return &x != &*k_it && x.right == br;
        });
        if (!clash) {
          for (const RoutedEdge& x : e)
            if (&x != &*k_it) rerouted[kept++] = x;
        } else if (!j5_split) {
          j5_split = Split{r2, gl, br};
          j5_k = static_cast<std::size_t>(k_it - e.begin());
          for (std::size_t i = 0; i < 4; ++i)
            if (i != *j5_k && e[i].right == br) j5_j = i;
        }
      }
      if (kept == 3) {
        rerouted[3] = RoutedEdge{gl, br, r2};
        trace_.reduced_to_case2 = true;
        trace_.r2 = pivot_ref(r2);
        return case2(rerouted, r1, r2);
      }
    }
    const ComponentRef R1 = pivot_ref(r1);
    if (!other_pivot) {
      // R1 is the only pivot-coloured component, so it spans V(F).
      return first_cover({{R1}});
    }
    if (!j5_split) return std::nullopt;
    trace_.r2 = pivot_ref(j5_split->r2);
    trace_.j[4] = witness(j5_split->r2, j5_split->left, j5_split->right);
    const ComponentRef B3 = right_ref(e[*j5_j].right);
    const ComponentRef G4 = left_ref(e[*j5_k].left);
    std::vector<std::vector<ComponentRef>> candidates;
    for (Colour c : {roles_.left, roles_.right}) {
      for (Vertex id : h_.part(c)) {
        candidates.push_back({R1, B3, ComponentRef{c, id}});
        candidates.push_back({R1, G4, ComponentRef{c, id}});
      }
    }
    candidates.push_back({R1, B3, G4});
    return first_cover(candidates);
  }

 private:
  const ComponentHypergraph& h_;
  const ComponentLabelling& labelling_;
  Roles roles_;
  Alpha2Trace& trace_;
  std::map<std::array<Vertex, kNumColours>, Vertex> witness_;
};

}  // namespace

StrategyOutcome strategy_alpha2(const ColouredGraph& cg, const ShortcutGraph& f, const ComponentHypergraph& h,
                                const ComponentLabelling& labelling, Colour pivot, Alpha2Trace* trace) {
  (void)cg;
  (void)f;
  StrategyOutcome out;
  Alpha2Trace local;
  Alpha2Trace& t = trace ? *trace : local;
  t = Alpha2Trace{};
  t.pivot = pivot;
  const auto [left_colour, right_colour] = link_sides(pivot);
  const Roles roles{pivot, left_colour, right_colour};

  const BipartiteGraph l = link_union(h, pivot);
  const MatchingCertificate m = max_matching_bipartite(l);
  t.nu_l = m.size();
  CaseAnalysis analysis(h, labelling, roles, t);
  for (std::size_t e : m.members)
    t.matching.push_back({analysis.left_ref(l.edges[e].left), analysis.right_ref(l.edges[e].right)});

  if (m.size() <= 3) {
    const CoverCertificate cover = konig_cover(l, m);
    std::vector<ComponentRef> comps;
    for (std::size_t v : cover.cover)
      comps.push_back(v < l.left ? analysis.left_ref(v) : analysis.right_ref(v - l.left));
    if (!covers_all(labelling, comps))
      throw InternalError("lifted Konig cover of the link union misses a vertex");
    t.winner = comps;
    out.cover = std::move(comps);
    return out;
  }

  // First four matching edges; find the smallest pivot set S, |S| <= 2,
  // meeting every edge's origin.
  std::array<std::size_t, 4> chosen{};
  for (std::size_t i = 0; i < 4; ++i) chosen[i] = m.members[i];
  auto has = [&](std::size_t e, std::size_t s) {
    const auto& o = l.origin[e];
    return std::binary_search(o.begin(), o.end(), s);
  };
  auto routed = [&](std::size_t i, std::size_t s) {
    return RoutedEdge{l.edges[chosen[i]].left, l.edges[chosen[i]].right, s};
  };
  const std::size_t num_pivots = h.part(pivot).size();

  for (std::size_t s = 0; s < num_pivots; ++s) {
    if (std::all_of(chosen.begin(), chosen.end(), [&](std::size_t e) { return has(e, s); })) {
      t.case_number = 3;
      t.r1 = analysis.pivot_ref(s);
      std::array<RoutedEdge, 4> e{routed(0, s), routed(1, s), routed(2, s), routed(3, s)};
      out.cover = analysis.case3(e, s);
      if (!out.cover) out.notes.push_back("alpha2 case 3: no candidate covers V(F)");
      return out;
    }
  }
  for (std::size_t s = 0; s < num_pivots; ++s) {
    for (std::size_t u = s + 1; u < num_pivots; ++u) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t e) { return has(e, s) || has(e, u); }))
        continue;
      std::vector<RoutedEdge> on_s;
      std::vector<RoutedEdge> on_u;
      for (std::size_t i = 0; i < 4; ++i) {
        if (has(chosen[i], s))
          on_s.push_back(routed(i, s));
        else
          on_u.push_back(routed(i, u));
      }
      std::size_t r1 = s;
      std::size_t r2 = u;
      if (on_s.size() < on_u.size()) {
        std::swap(on_s, on_u);
        std::swap(r1, r2);
      }
      std::array<RoutedEdge, 4> e{};
      std::copy(on_s.begin(), on_s.end(), e.begin());
      std::copy(on_u.begin(), on_u.end(), e.begin() + static_cast<std::ptrdiff_t>(on_s.size()));
      t.r1 = analysis.pivot_ref(r1);
      t.r2 = analysis.pivot_ref(r2);
      if (on_s.size() == 2) {
        t.case_number = 1;
        out.cover = analysis.case1(e, r1, r2);
      } else {
        t.case_number = 2;
        out.cover = analysis.case2(e, r1, r2);
      }
      if (!out.cover) out.notes.push_back("alpha2 case " + std::to_string(t.case_number) + ": no candidate covers V(F)");
      return out;
    }
  }
  out.notes.push_back("alpha2: four matching edges need three pivot components (nu(H) >= 3, so alpha(F) > 2)");
  return out;
}

}  // namespace monotree
