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

// Command-line front end. Graph files use the text format of
// monotree::read_coloured_graph; results are printed as JSON.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monotree/bipartite.hpp"
#include "monotree/components.hpp"
#include "monotree/errors.hpp"
#include "monotree/experiment.hpp"
#include "monotree/graph.hpp"
#include "monotree/hypergraph.hpp"
#include "monotree/json_io.hpp"
#include "monotree/pseudorandom.hpp"
#include "monotree/solver.hpp"

namespace {

using monotree::Json;

/// "1/6" or "0.1666".
double parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return std::stod(text);
  const double den = std::stod(text.substr(slash + 1));
  if (den == 0) throw monotree::ParameterError("zero denominator in " + text);
  return std::stod(text.substr(0, slash)) / den;
}

monotree::Colour parse_colour(const std::string& text) {
  auto c = monotree::colour_from_name(text);
  if (!c) throw monotree::ParameterError("unknown colour '" + text + "'");
  return *c;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic tree covers of 3-edge-coloured graphs"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Sample G(n,p), colour it and write the text format");
  std::size_t gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_mode = "random";
  std::string gen_base = "red";
  std::string gen_out;
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--p", gen_p, "Edge probability")->required();
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--mode", gen_mode, "random | three-star")->check(CLI::IsMember({"random", "three-star"}));
  gen->add_option("--base", gen_base, "Base colour for three-star mode");
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  std::string file;
  auto* comps = app.add_subcommand("components", "Monochromatic components per colour");
  comps->add_option("file", file)->required();

  auto* shortcut = app.add_subcommand("shortcut", "Shortcut graph F with the inherited colouring");
  std::string shortcut_out;
  shortcut->add_option("file", file)->required();
  shortcut->add_option("--out", shortcut_out, "Output file (default stdout)");

  auto* hyper = app.add_subcommand("hyper", "Component hypergraph, tau, nu, nu(L) and the Konig cover");
  std::string pivot_name = "red";
  hyper->add_option("file", file)->required();
  hyper->add_option("--pivot", pivot_name, "Link-union pivot colour");

  auto* solve = app.add_subcommand("solve", "Cover with monochromatic trees; exit 0 iff the cover verifies");
  monotree::SolverConfig solver_cfg;
  std::string solve_pivot = "red";
  solve->add_option("file", file)->required();
  solve->add_option("--exact-threshold", solver_cfg.exact_threshold, "Always run the exact oracle up to this many components");
  solve->add_option("--pivot", solve_pivot, "Link-union pivot colour");

  auto* oracle = app.add_subcommand("oracle", "Exact minimum component cover only");
  std::size_t oracle_k = monotree::kUnbounded;
  oracle->add_option("file", file)->required();
  oracle->add_option("--k-max", oracle_k, "Give up above this cover size");

  auto* pseudo = app.add_subcommand("check-pseudo", "G(n,p) concentration checks");
  std::size_t ps_n = 0;
  double ps_p = 0.5;
  std::uint64_t ps_seed = 0;
  std::string ps_graph;
  monotree::PseudorandomConfig ps_cfg;
  pseudo->add_option("--p", ps_p, "Edge probability the graph is checked against")->required();
  pseudo->add_option("--n", ps_n, "Sample G(n,p) with this many vertices");
  pseudo->add_option("--graph", ps_graph, "Check the underlying graph of this file instead");
  pseudo->add_option("--seed", ps_seed, "Seed for sampling the graph and the checks");
  pseudo->add_option("--epsilon", ps_cfg.epsilon, "Relative tolerance");
  pseudo->add_option("--size-constant", ps_cfg.size_constant, "C in |X| >= C ln n / p");
  pseudo->add_option("--max-tuple", ps_cfg.max_tuple, "Largest common-neighbourhood tuple (<= 6)");
  pseudo->add_option("--density-samples", ps_cfg.density_samples, "Sampled (X, Y) pairs");
  pseudo->add_option("--set-size", ps_cfg.set_size, "|X| = |Y| (0 = C ln n / p)");
  pseudo->add_option("--tuple-samples", ps_cfg.tuple_samples, "Sampled tuples per size");

  auto* probe = app.add_subcommand("probe", "Sweep (n, p) and summarize cover sizes");
  std::string pr_n;
  std::string pr_p;
  std::string pr_exp;
  std::string pr_scale = "1.0";
  std::string pr_mode = "random";
  std::string pr_out;
  std::uint64_t pr_seed = 0;
  monotree::ExperimentConfig pr_cfg;
  bool pr_no_exact = false;
  probe->add_option("--n", pr_n, "Comma-separated vertex counts")->required();
  probe->add_option("--p", pr_p, "Comma-separated explicit probabilities");
  probe->add_option("--p-exp", pr_exp, "Exponent e in p = scale (ln n / n)^e, e.g. 1/6");
  probe->add_option("--p-scale", pr_scale, "Comma-separated scales");
  probe->add_option("--trials", pr_cfg.trials, "Trials per cell");
  probe->add_option("--mode", pr_mode, "random | three-star | both")->check(CLI::IsMember({"random", "three-star", "both"}));
  probe->add_option("--seed", pr_seed, "Seed");
  probe->add_option("--threads", pr_cfg.threads, "Worker threads (0 = all cores)");
  probe->add_option("--exact-limit", pr_cfg.exact_component_limit, "Skip the oracle above this many components");
  probe->add_flag("--no-exact", pr_no_exact, "Never run the exact oracle");
  probe->add_option("--out", pr_out, "Output path (.csv or .json)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const auto g = monotree::generate_gnp(gen_n, gen_p, monotree::Seed{gen_seed});
      monotree::ColouredGraph cg;
      if (gen_mode == "random") {
        cg = monotree::colour_random(g, monotree::Seed{gen_seed}.child(1));
      } else {
        const auto triple = monotree::find_independent_triple(g);
        if (!triple) {
          std::cerr << "no pairwise non-adjacent triple in the sampled graph\n";
          return 2;
        }
        cg = monotree::colour_three_stars(g, (*triple)[0], (*triple)[1], (*triple)[2], parse_colour(gen_base));
      }
      if (gen_out.empty())
        monotree::write_coloured_graph(std::cout, cg);
      else
        monotree::store(gen_out, cg);
      return 0;
    }
    if (*comps) {
      print(monotree::to_json(monotree::monochromatic_components(monotree::load(file))));
      return 0;
    }
    if (*shortcut) {
      const auto f = monotree::shortcut_graph(monotree::load(file));
      if (shortcut_out.empty())
        monotree::write_coloured_graph(std::cout, f.base);
      else
        monotree::store(shortcut_out, f.base);
      return 0;
    }
    if (*hyper) {
      const auto cg = monotree::load(file);
      const auto labelling = monotree::monochromatic_components(cg);
      const auto h = monotree::build_component_hypergraph(labelling);
      const auto pivot = parse_colour(pivot_name);
      const auto tau = monotree::tau_exact(h);
      const auto nu = monotree::nu_exact(h);
      const auto l = monotree::link_union(h, pivot);
      const auto ml = monotree::max_matching_bipartite(l);
      const auto kc = monotree::konig_cover(l, ml);
      const auto sides = monotree::link_sides(pivot);
      Json konig = Json::array();
      for (std::size_t v : kc.cover)
        konig.push_back(v < l.left ? monotree::to_json(monotree::ComponentRef{sides[0], h.part(sides[0])[v]})
                                   : monotree::to_json(monotree::ComponentRef{sides[1], h.part(sides[1])[v - l.left]}));
      Json tau_cover = Json::array();
      for (const auto& ref : monotree::cover_components(h, tau)) tau_cover.push_back(monotree::to_json(ref));
      Json nu_edges = Json::array();
      for (std::size_t e : nu.members) nu_edges.push_back(e);
      Json out = monotree::to_json(h);
      out["tau"] = tau.size();
      out["tau_cover"] = std::move(tau_cover);
      out["nu"] = nu.size();
      out["nu_matching"] = std::move(nu_edges);
      out["nu_l"] = ml.size();
      out["konig_cover"] = std::move(konig);
      print(out);
      return 0;
    }
    if (*solve) {
      const auto cg = monotree::load(file);
      solver_cfg.link_pivot = parse_colour(solve_pivot);
      const auto sol = monotree::solve_cover(cg, solver_cfg);
      print(monotree::to_json(sol));
      return monotree::verify_cover(cg, sol.cover).ok() ? 0 : 1;
    }
    if (*oracle) {
      const auto cg = monotree::load(file);
      const auto h = monotree::build_component_hypergraph(monotree::monochromatic_components(cg));
      const auto tau = monotree::tau_exact(h, oracle_k);
      Json out;
      if (tau) {
        Json cover = Json::array();
        for (const auto& ref : monotree::cover_components(h, *tau)) cover.push_back(monotree::to_json(ref));
        out["tau"] = tau->size();
        out["cover"] = std::move(cover);
      } else {
        out["tau"] = nullptr;
        out["note"] = "tau exceeds k-max";
      }
      print(out);
      return 0;
    }
    if (*pseudo) {
      monotree::SimpleGraph g;
      if (!ps_graph.empty())
        g = monotree::load(ps_graph).graph();
      else
        g = monotree::generate_gnp(ps_n, ps_p, monotree::Seed{ps_seed});
      const monotree::Seed check_seed = monotree::Seed{ps_seed}.child(7);
      Json out = Json::array();
      out.push_back(monotree::to_json(monotree::check_degrees(g, ps_p, ps_cfg)));
      out.push_back(monotree::to_json(monotree::check_edge_density(g, ps_p, ps_cfg, check_seed.child(0))));
      out.push_back(monotree::to_json(monotree::check_common_neighbourhoods(g, ps_p, ps_cfg, check_seed.child(1))));
      print(out);
      return 0;
    }
    if (*probe) {
      auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        for (std::string item; std::getline(ss, item, ',');)
          if (!item.empty()) out.push_back(item);
        return out;
      };
      for (const auto& s : split(pr_n)) pr_cfg.n_values.push_back(std::stoul(s));
      for (const auto& s : split(pr_p)) pr_cfg.p_values.push_back(parse_fraction(s));
      if (!pr_exp.empty()) {
        pr_cfg.p_exponent = parse_fraction(pr_exp);
        pr_cfg.p_scales.clear();
        for (const auto& s : split(pr_scale)) pr_cfg.p_scales.push_back(std::stod(s));
      }
      if (pr_mode == "both")
        pr_cfg.modes = {monotree::ColouringMode::Random, monotree::ColouringMode::ThreeStar};
      else if (pr_mode == "three-star")
        pr_cfg.modes = {monotree::ColouringMode::ThreeStar};
      pr_cfg.seed = monotree::Seed{pr_seed};
      pr_cfg.exact_oracle = !pr_no_exact;
      monotree::probe_threshold(pr_cfg, pr_out);
      return 0;
    }
  } catch (const monotree::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
