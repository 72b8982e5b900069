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

#include "monotree/json_io.hpp"

namespace monotree {

namespace {

Json refs(const std::vector<ComponentRef>& comps) {
  Json arr = Json::array();
  for (const ComponentRef& r : comps) arr.push_back(to_json(r));
  return arr;
}

Json pattern(const std::array<Colour, 3>& p) {
  Json arr = Json::array();
  for (Colour c : p) arr.push_back(colour_name(c));
  return arr;
}

}  // namespace

Json to_json(ComponentRef ref) { return Json{{"colour", colour_name(ref.colour)}, {"id", ref.id}}; }

Json to_json(const ComponentLabelling& labelling) {
  Json out = Json::object();
  for (Colour c : kColours) {
    Json comps = Json::array();
    for (Vertex id : labelling[c].ids()) comps.push_back(labelling[c].members(id).to_vector());
    out[std::string(colour_name(c))] = std::move(comps);
  }
  return out;
}

Json to_json(const ComponentHypergraph& h) {
  Json parts = Json::object();
  for (Colour c : kColours) parts[std::string(colour_name(c))] = h.part(c);
  Json edges = Json::array();
  for (const Hyperedge& e : h.edges())
    edges.push_back(Json{{"red", e.ids[index(Colour::Red)]},
                         {"green", e.ids[index(Colour::Green)]},
                         {"blue", e.ids[index(Colour::Blue)]},
                         {"witness", e.witness}});
  return Json{{"parts", std::move(parts)}, {"hyperedges", std::move(edges)}};
}

Json to_json(const TreeCover& cover) {
  Json arr = Json::array();
  for (const Tree& t : cover.trees) {
    Json edges = Json::array();
    for (const auto& [v, p] : t.parent)
      if (v != t.root) edges.push_back(Json::array({p, v}));
    arr.push_back(Json{{"colour", colour_name(t.colour)},
                       {"root", t.root},
                       {"vertices", t.vertices()},
                       {"edges", std::move(edges)}});
  }
  return arr;
}

Json to_json(const TraceReport& trace) {
  Json out;
  out["alpha"] = to_string(trace.alpha.kind);
  if (trace.alpha.witness) out["alpha_witness"] = *trace.alpha.witness;
  out["branch"] = to_string(trace.branch);
  out["source"] = trace.source;
  out["hypergraph_vertices"] = trace.hypergraph_vertices;
  out["strategy_cover"] = trace.strategy_cover ? refs(*trace.strategy_cover) : Json(nullptr);
  out["exact_size"] = trace.exact_size ? Json(*trace.exact_size) : Json(nullptr);
  out["chosen"] = refs(trace.chosen);
  if (const auto& t = trace.alpha_ge3) {
    Json a;
    a["triple"] = t->triple;
    a["common_neighbourhood"] = t->common_neighbourhood;
    a["x_rbg"] = t->x_rbg;
    a["pattern"] = pattern(t->pattern);
    a["outside"] = t->outside;
    a["y"] = t->y ? Json(*t->y) : Json(nullptr);
    a["x_yrbg"] = t->x_yrbg;
    a["y_pattern"] = t->y_pattern ? pattern(*t->y_pattern) : Json(nullptr);
    a["pivot"] = std::string(1, "rbg"[t->pivot]);
    a["candidates"] = refs(t->candidates);
    a["winner"] = refs(t->winner);
    out["alpha_ge3"] = std::move(a);
  }
  if (const auto& t = trace.alpha2) {
    Json a;
    a["pivot"] = colour_name(t->pivot);
    a["nu_l"] = t->nu_l;
    Json m = Json::array();
    for (const auto& [l, r] : t->matching) m.push_back(Json::array({to_json(l), to_json(r)}));
    a["matching"] = std::move(m);
    a["case"] = t->case_number;
    a["reduced_to_case2"] = t->reduced_to_case2;
    a["r1"] = t->r1 ? to_json(*t->r1) : Json(nullptr);
    a["r2"] = t->r2 ? to_json(*t->r2) : Json(nullptr);
    Json ce = Json::array();
    for (const auto& [l, r] : t->case_edges) ce.push_back(Json::array({to_json(l), to_json(r)}));
    a["case_edges"] = std::move(ce);
    Json j = Json::array();
    for (const auto& w : t->j) j.push_back(w ? Json(*w) : Json(nullptr));
    a["j"] = std::move(j);
    a["candidates_tested"] = t->candidates_tested;
    a["winner"] = refs(t->winner);
    out["alpha2"] = std::move(a);
  }
  out["notes"] = trace.notes;
  return out;
}

Json to_json(const Solution& solution) {
  return Json{{"cover", to_json(solution.cover)}, {"size", solution.cover.size()}, {"trace", to_json(solution.trace)}};
}

Json to_json(const CheckReport& report) {
  Json results = Json::array();
  for (const CheckResult& r : report.results) {
    results.push_back(Json{{"label", r.label},
                           {"status", to_string(r.status)},
                           {"samples", r.samples},
                           {"passed", r.passed},
                           {"failed", r.failed},
                           {"expected", r.expected},
                           {"worst_deviation", r.worst_deviation},
                           {"witnesses", r.witnesses},
                           {"notes", r.notes}});
  }
  return Json{{"check", report.check}, {"results", std::move(results)}};
}

Json to_json(const Verdict& verdict) {
  Json v = Json::array();
  for (const Violation& x : verdict.violations) v.push_back(x.message);
  return Json{{"ok", verdict.ok()}, {"violations", std::move(v)}};
}

}  // namespace monotree
