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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "monotree/bipartite.hpp"
#include "monotree/experiment.hpp"
#include "monotree/hypergraph.hpp"
#include "monotree/pseudorandom.hpp"
#include "monotree/solver.hpp"
#include "oracles.hpp"

namespace monotree {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures with the first few explained.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  std::size_t failed() const { return failed_; }
  Outcome outcome(const std::string& summary) const {
    std::string d = summary + ", " + std::to_string(failed_) + " failures in " + std::to_string(checked_) + " checks";
    if (!first_.empty()) d += " (" + first_ + ")";
    return {failed_ == 0, d};
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
};

std::string num(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

ColouredGraph coloured_complete(std::size_t n, std::uint64_t code, std::uint64_t base) {
  ColouredGraph cg(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      cg.add_edge(u, v, colour_at(code % base));
      code /= base;
    }
  return cg;
}

Outcome desk_scale_probe() {
  Tally t;
  std::size_t oracle_runs = 0;
  std::size_t trials = 0;
  for (std::size_t n : {300, 600}) {
    const double p = 1.5 * std::pow(std::log(static_cast<double>(n)) / static_cast<double>(n), 1.0 / 6);
    for (auto [mode, count] : {std::pair{ColouringMode::Random, 200}, std::pair{ColouringMode::ThreeStar, 50}}) {
      ExperimentConfig cfg;
      cfg.n_values = {n};
      cfg.p_values = {p};
      cfg.modes = {mode};
      cfg.trials = static_cast<std::size_t>(count);
      cfg.seed = Seed{20261};
      std::vector<TrialRecord> records;
      run_probe(cfg, &records);
      for (const auto& r : records) {
        const std::string id = "n=" + std::to_string(n) + " " + to_string(mode) + " trial " + std::to_string(r.trial);
        ++trials;
        t.check(!r.skipped, id + " skipped");
        if (r.skipped) continue;
        t.check(r.cover_size <= 3, id + " size " + std::to_string(r.cover_size));
        t.check(r.verified, id + " not verified");
        if (r.exact_minimum) {
          ++oracle_runs;
          t.check(*r.exact_minimum <= 3, id + " oracle " + std::to_string(*r.exact_minimum));
        }
      }
    }
  }
  return t.outcome(std::to_string(trials) + " trials, oracle ran on " + std::to_string(oracle_runs));
}

Outcome three_star_lower_bound() {
  Tally t;
  ExperimentConfig cfg;
  cfg.seed = Seed{20262};
  cfg.exact_component_limit = kUnbounded;
  const Cell cell{300, 0.5, ColouringMode::ThreeStar};
  for (std::size_t i = 0; i < 50; ++i) {
    const auto r = run_trial(cell, i, cfg);
    const std::string id = "trial " + std::to_string(i);
    t.check(!r.skipped, id + " skipped");
    if (r.skipped) continue;
    t.check(r.exact_minimum && *r.exact_minimum == 3, id + " oracle");
    t.check(r.cover_size == 3, id + " size " + std::to_string(r.cover_size));
    t.check(r.verified, id + " not verified");
  }
  return t.outcome("50 instances at n=300, p=0.5");
}

Outcome k5_pair_search() {
  Tally t;
  std::size_t pairs = 0;
  for (std::uint64_t code = 0; code < 59049; ++code) {
    const auto cg = coloured_complete(5, code, 3);
    const auto found = egp_partition_search(shortcut_graph(cg));
    pairs += found.size() == 2;
    t.check(found.size() <= 2 && covers_all(monochromatic_components(cg), found),
            "colouring " + std::to_string(code));
    t.check(found.size() == oracle::min_component_cover(cg), "colouring " + std::to_string(code) + " not minimum");
  }
  return t.outcome("59049 colourings, " + std::to_string(pairs) + " need two components");
}

Outcome k6_two_colourings() {
  Tally t;
  for (std::uint64_t code = 0; code < (1u << 15); ++code) {
    const auto cg = coloured_complete(6, code, 2);
    t.check(oracle::min_component_cover(cg) == 1, "brute force, colouring " + std::to_string(code));
    t.check(solve_cover(cg).cover.size() == 1, "solve_cover, colouring " + std::to_string(code));
  }
  return t.outcome("32768 colourings");
}

Outcome oracle_equivalence() {
  Tally t;
  const double ps[] = {0.3, 0.6, 0.9};
  Seed root{20265};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 9;
    const auto cg = colour_random(generate_gnp(n, ps[i % 3], root.child(i).child(0)), root.child(i).child(1));
    const std::size_t solved = solve_cover(cg).cover.size();
    const std::size_t tau = tau_exact(build_component_hypergraph(monochromatic_components(cg))).size();
    const std::size_t brute = oracle::min_component_cover(cg);
    t.check(solved == tau && tau == brute, "instance " + std::to_string(i) + ": " + std::to_string(solved) + "/" +
                                               std::to_string(tau) + "/" + std::to_string(brute));
  }
  return t.outcome("200 instances, n <= 9");
}

Outcome konig_suite() {
  Tally t;
  Rng rng(Seed{20266});
  std::size_t max_nu = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t left = 1 + rng.below(40);
    const std::size_t right = 1 + rng.below(40);
    const double p = rng.uniform() * 0.25;
    std::vector<BipartiteGraph::Edge> edges;
    for (std::size_t a = 0; a < left; ++a)
      for (std::size_t b = 0; b < right; ++b)
        if (rng.bernoulli(p)) edges.push_back({a, b});
    const auto l = BipartiteGraph::from_edges(left, right, std::move(edges));
    const auto m = max_matching_bipartite(l);
    const auto c = konig_cover(l, m);
    max_nu = std::max(max_nu, m.size());
    const std::string id = "graph " + std::to_string(i);
    t.check(is_matching(l, m) && m.size() == oracle::kuhn_matching(l), id + " matching");
    t.check(c.size() == m.size(), id + " cover size");
    t.check(is_vertex_cover(l, c), id + " cover invalid");
  }
  return t.outcome("1000 graphs, largest matching " + std::to_string(max_nu));
}

Outcome hypergraph_inequalities() {
  Tally t;
  std::size_t alpha_two = 0;
  Seed root{20267};
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 12;
    const double p = 0.1 + 0.1 * static_cast<double>(i % 9);
    const auto cg = colour_random(generate_gnp(n, p, root.child(i).child(0)), root.child(i).child(1));
    const auto f = shortcut_graph(cg);
    const auto h = build_component_hypergraph(monochromatic_components(cg));
    const auto m = nu_exact(h);
    const std::size_t nu = m.size();
    const std::size_t tau = tau_exact(h).size();
    const std::string id = "instance " + std::to_string(i);
    t.check(nu <= tau && tau <= 3 * nu, id + " sandwich");
    t.check(tau <= 2 * nu, id + " tau > 2 nu");
    if (alpha_class(f).kind == AlphaClass::Kind::Two) {
      ++alpha_two;
      t.check(nu <= 2, id + " nu > 2 with alpha = 2");
    }
    const auto set = matching_to_independent_set(h, m);
    bool independent = set.size() == nu;
    for (std::size_t a = 0; a < set.size(); ++a)
      for (std::size_t b = a + 1; b < set.size(); ++b)
        independent = independent && !f.base.adjacent(set[a], set[b]) && !oracle::shortcut_adjacent(cg, set[a], set[b]);
    t.check(independent, id + " independent set");
  }
  return t.outcome("500 instances, " + std::to_string(alpha_two) + " with alpha = 2");
}

Outcome concentration() {
  const auto g = generate_gnp(3000, 0.5, Seed{20268});
  PseudorandomConfig cfg;
  cfg.epsilon = 0.1;
  const auto degrees = check_degrees(g, 0.5, cfg).results.at(0);
  cfg.set_size = 100;
  cfg.density_samples = 200;
  const auto density = check_edge_density(g, 0.5, cfg, Seed{20268}.child(1)).results.at(0);
  cfg.epsilon = 0.25;
  cfg.max_tuple = 4;
  cfg.tuple_samples = 100;
  const auto common = check_common_neighbourhoods(g, 0.5, cfg, Seed{20268}.child(2));

  bool pass = degrees.all_passed() && density.status == CheckStatus::Ok && density.samples == 200 &&
              density.pass_fraction() >= 0.99;
  std::string d = "degrees " + std::to_string(degrees.passed) + "/" + std::to_string(degrees.samples) +
                  ", density " + num(density.pass_fraction()) + " (worst " + num(density.worst_deviation) + ")";
  for (const auto& r : common.results) {
    pass = pass && r.status == CheckStatus::Ok && r.samples == 100 && r.pass_fraction() >= 0.99;
    d += ", " + r.label + " " + num(r.pass_fraction());
  }
  return {pass, d};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome determinism() {
  ExperimentConfig cfg;
  cfg.n_values = {60, 120};
  cfg.p_exponent = 1.0 / 6;
  cfg.p_scales = {0.8, 1.0, 1.5};
  cfg.trials = 12;
  cfg.modes = {ColouringMode::Random, ColouringMode::ThreeStar};
  cfg.seed = Seed{42};
  const auto dir = std::filesystem::temp_directory_path();
  const auto serial = dir / "monotree_accept_serial.csv";
  const auto parallel = dir / "monotree_accept_parallel.csv";
  cfg.threads = 1;
  probe_threshold(cfg, serial);
  cfg.threads = 8;
  probe_threshold(cfg, parallel);
  const std::string a = slurp(serial);
  const std::string b = slurp(parallel);
  std::filesystem::remove(serial);
  std::filesystem::remove(parallel);
  return {!a.empty() && a == b, std::to_string(a.size()) + " bytes serial, " + std::to_string(b.size()) +
                                     " bytes with 8 threads" + (a == b ? ", identical" : ", different")};
}

}  // namespace
}  // namespace monotree

int main() {
  using monotree::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"desk-scale probe, covers <= 3", monotree::desk_scale_probe},
      {"three-star colourings need exactly 3", monotree::three_star_lower_bound},
      {"K5 colourings, pair search", monotree::k5_pair_search},
      {"K6 two-colourings, one tree", monotree::k6_two_colourings},
      {"oracle equivalence", monotree::oracle_equivalence},
      {"Konig suite", monotree::konig_suite},
      {"hypergraph inequalities", monotree::hypergraph_inequalities},
      {"G(n,p) concentration", monotree::concentration},
      {"probe determinism", monotree::determinism},
  };
  int failures = 0;
  int number = 0;
  for (const auto& [name, run] : criteria) {
    ++number;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d. %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", number, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", number - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
