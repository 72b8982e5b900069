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

#include "monotree/solver.hpp"

#include <algorithm>

#include "monotree/errors.hpp"

namespace monotree {

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::Egp:
      return "EGP";
    case Branch::AlphaGe3:
      return "alpha>=3";
    case Branch::Alpha2Konig:
      return "alpha2-konig";
    case Branch::Alpha2Case1:
      return "alpha2-case1";
    case Branch::Alpha2Case2:
      return "alpha2-case2";
    case Branch::Alpha2Case3:
      return "alpha2-case3";
    case Branch::ExactFallback:
      return "exact-fallback";
  }
  return "?";
}

std::vector<ComponentRef> egp_partition_search(const ShortcutGraph& f) {
  if (!f.base.graph().is_complete()) throw PreconditionError("egp_partition_search needs a complete F");
  const std::size_t n = f.base.num_vertices();
  if (n == 0) return {};
  const ComponentLabelling labelling = monochromatic_components(f.base);
  // Any covering pair contains a component through vertex 0, and its partner
  // contains the first vertex that component misses.
  for (Colour c : kColours) {
    const ComponentRef a = labelling.component_of(0, c);
    if (labelling.members(a).all()) return {a};
  }
  for (Colour c : kColours) {
    const ComponentRef a = labelling.component_of(0, c);
    const Vertex u = labelling.members(a).find_first_clear();
    for (Colour d : kColours) {
      const ComponentRef b = labelling.component_of(u, d);
      if ((labelling.members(a) | labelling.members(b)).all()) return {a, b};
    }
  }
  throw InternalError("no two monochromatic components cover a complete 3-coloured graph");
}

Solution solve_cover(const ColouredGraph& cg, const SolverConfig& config) {
  Solution sol;
  TraceReport& trace = sol.trace;
  const ComponentLabelling labelling = monochromatic_components(cg);
  const ShortcutGraph f = shortcut_graph(cg);
  const ComponentHypergraph h = build_component_hypergraph(labelling);
  trace.alpha = alpha_class(f);
  trace.hypergraph_vertices = h.num_vertices();

  std::optional<std::vector<ComponentRef>> strategy;
  switch (trace.alpha.kind) {
    case AlphaClass::Kind::One:
      trace.branch = Branch::Egp;
      strategy = egp_partition_search(f);
      break;
    case AlphaClass::Kind::ThreeOrMore: {
      trace.branch = Branch::AlphaGe3;
      AlphaGe3Trace t;
      StrategyOutcome out = strategy_alpha_ge3(cg, f, *trace.alpha.witness, labelling, &t);
      trace.alpha_ge3 = std::move(t);
      strategy = std::move(out.cover);
      trace.notes.insert(trace.notes.end(), out.notes.begin(), out.notes.end());
      break;
    }
    case AlphaClass::Kind::Two: {
      Alpha2Trace t;
      StrategyOutcome out = strategy_alpha2(cg, f, h, labelling, config.link_pivot, &t);
      switch (t.case_number) {
        case 0:
          trace.branch = Branch::Alpha2Konig;
          break;
        case 1:
          trace.branch = Branch::Alpha2Case1;
          break;
        case 2:
          trace.branch = Branch::Alpha2Case2;
          break;
        default:
          trace.branch = Branch::Alpha2Case3;
          break;
      }
      trace.alpha2 = std::move(t);
      strategy = std::move(out.cover);
      trace.notes.insert(trace.notes.end(), out.notes.begin(), out.notes.end());
      break;
    }
  }
  if (strategy) {
    std::sort(strategy->begin(), strategy->end());
    strategy->erase(std::unique(strategy->begin(), strategy->end()), strategy->end());
    if (!covers_all(labelling, *strategy)) throw InternalError("strategy returned a non-covering component set");
  }
  trace.strategy_cover = strategy;

  std::vector<ComponentRef> chosen;
  if (!strategy) {
    trace.branch = Branch::ExactFallback;
    const CoverCertificate exact = tau_exact(h);
    trace.exact_size = exact.size();
    chosen = cover_components(h, exact);
    trace.source = "exact";
  } else if (h.num_vertices() <= config.exact_threshold) {
    // Only a strictly smaller cover can replace the strategy's.
    chosen = *strategy;
    trace.source = "strategy";
    trace.exact_size = strategy->size();
    if (!strategy->empty()) {
      if (auto better = tau_exact(h, strategy->size() - 1)) {
        trace.exact_size = better->size();
        chosen = cover_components(h, *better);
        trace.source = "exact";
      }
    }
  } else {
    chosen = *strategy;
    trace.source = "strategy";
  }
  trace.chosen = chosen;

  sol.cover = components_to_trees(cg, chosen);
  const Verdict verdict = verify_cover(cg, sol.cover);
  if (!verdict.ok()) throw InternalError("solve_cover produced an invalid cover: " + verdict.violations.front().message);
  return sol;
}

}  // namespace monotree
