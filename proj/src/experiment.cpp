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

#include "monotree/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "monotree/errors.hpp"

namespace monotree {

const char* to_string(ColouringMode mode) {
  return mode == ColouringMode::Random ? "random" : "three-star";
}

void ExperimentConfig::validate() const {
  if (n_values.empty()) throw ParameterError("no n values");
  if (trials == 0) throw ParameterError("trials must be at least 1");
  if (modes.empty()) throw ParameterError("no colouring modes");
  if (!p_exponent && p_values.empty()) throw ParameterError("no p values");
  if (p_exponent && p_scales.empty()) throw ParameterError("no p scales");
  for (const Cell& c : cells()) {
    if (!(c.p > 0.0 && c.p <= 1.0)) throw ParameterError("p must lie in (0, 1], got " + std::to_string(c.p));
    if (c.mode == ColouringMode::ThreeStar && c.n < 4) throw ParameterError("three-star mode needs n >= 4");
  }
}

std::vector<Cell> ExperimentConfig::cells() const {
  std::vector<Cell> out;
  for (std::size_t n : n_values) {
    std::vector<double> ps;
    if (p_exponent) {
      const double nn = static_cast<double>(n);
      const double base = n > 1 ? std::pow(std::log(nn) / nn, *p_exponent) : 1.0;
      for (double s : p_scales) ps.push_back(std::min(1.0, s * base));
    } else {
      ps = p_values;
    }
    for (double p : ps)
      for (ColouringMode m : modes) out.push_back({n, p, m});
  }
  std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) {
    return std::tuple(a.n, a.p, static_cast<int>(a.mode)) < std::tuple(b.n, b.p, static_cast<int>(b.mode));
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Cell& a, const Cell& b) { return a.n == b.n && a.p == b.p && a.mode == b.mode; }),
            out.end());
  return out;
}

Seed trial_seed(Seed seed, const Cell& cell, std::size_t trial) {
  return seed.child(cell.n)
      .child(std::bit_cast<std::uint64_t>(cell.p))
      .child(static_cast<std::uint64_t>(cell.mode))
      .child(trial);
}

TrialRecord run_trial(const Cell& cell, std::size_t trial, const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.n = cell.n;
  rec.p = cell.p;
  rec.trial = trial;
  rec.mode = cell.mode;
  const Seed seed = trial_seed(cfg.seed, cell, trial);
  const SimpleGraph g = generate_gnp(cell.n, cell.p, seed.child(0));
  ColouredGraph cg;
  if (cell.mode == ColouringMode::Random) {
    cg = colour_random(g, seed.child(1));
  } else {
    const auto triple = find_independent_triple(g);
    if (!triple) {
      rec.skipped = true;
      return rec;
    }
    Rng rng(seed.child(2));
    cg = colour_three_stars(g, (*triple)[0], (*triple)[1], (*triple)[2], colour_at(rng.below(kNumColours)));
  }
  const Solution sol = solve_cover(cg, cfg.solver);
  rec.cover_size = sol.cover.size();
  rec.branch = sol.trace.branch;
  rec.verified = verify_cover(cg, sol.cover).ok();
  if (cfg.exact_oracle && sol.trace.hypergraph_vertices <= cfg.exact_component_limit) {
    const ComponentHypergraph h = build_component_hypergraph(monochromatic_components(cg));
    rec.exact_minimum = tau_exact(h).size();
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

CellSummary summarize(const Cell& cell, const std::vector<TrialRecord>& records) {
  CellSummary s;
  s.cell = cell;
  std::size_t le3 = 0;
  std::size_t total = 0;
  bool all_exact = true;
  for (const TrialRecord& r : records) {
    if (r.skipped) continue;
    ++s.trials;
    total += r.cover_size;
    if (r.cover_size <= 3) ++le3;
    ++s.branches[static_cast<std::size_t>(r.branch)];
    all_exact = all_exact && r.exact_minimum.has_value();
  }
  if (s.trials > 0) {
    s.frac_le3 = static_cast<double>(le3) / static_cast<double>(s.trials);
    s.mean_size = static_cast<double>(total) / static_cast<double>(s.trials);
  }
  s.exact_available = s.trials > 0 && all_exact;
  return s;
}

std::size_t effective_threads(std::size_t requested) {
  std::size_t threads = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MONOTREE_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0) threads = std::min<std::size_t>(threads, cap);
  }
  return threads;
}

std::vector<CellSummary> run_probe(const ExperimentConfig& cfg, std::vector<TrialRecord>* records) {
  cfg.validate();
  const std::vector<Cell> cells = cfg.cells();
  const std::size_t total = cells.size() * cfg.trials;
  std::vector<TrialRecord> results(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        results[i] = run_trial(cells[i / cfg.trials], i % cfg.trials, cfg);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(effective_threads(cfg.threads), std::max<std::size_t>(total, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<CellSummary> rows;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto first = results.begin() + static_cast<std::ptrdiff_t>(c * cfg.trials);
    rows.push_back(summarize(cells[c], std::vector<TrialRecord>(first, first + static_cast<std::ptrdiff_t>(cfg.trials))));
  }
  if (records) *records = std::move(results);
  return rows;
}

namespace {

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

std::string to_csv(const std::vector<CellSummary>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const CellSummary& r : rows) {
    out << r.cell.n << ',' << fixed(r.cell.p, 6) << ',' << to_string(r.cell.mode) << ',' << r.trials << ','
        << fixed(r.frac_le3, 4) << ',' << fixed(r.mean_size, 4);
    for (std::size_t count : r.branches) out << ',' << count;
    out << ',' << (r.exact_available ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string to_json(const std::vector<CellSummary>& rows) {
  static constexpr std::array<const char*, 7> kBranchKeys = {
      "branch_egp", "branch_a3", "branch_konig", "branch_case1", "branch_case2", "branch_case3", "branch_fallback"};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CellSummary& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.cell.n;
    row["p"] = std::stod(fixed(r.cell.p, 6));
    row["mode"] = to_string(r.cell.mode);
    row["trials"] = r.trials;
    row["frac_le3"] = std::stod(fixed(r.frac_le3, 4));
    row["mean_size"] = std::stod(fixed(r.mean_size, 4));
    for (std::size_t b = 0; b < kBranchKeys.size(); ++b) row[kBranchKeys[b]] = r.branches[b];
    row["exact_available"] = r.exact_available ? 1 : 0;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

std::vector<CellSummary> probe_threshold(const ExperimentConfig& cfg, const std::filesystem::path& out) {
  cfg.validate();
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + out.string() + " for writing");
  auto rows = run_probe(cfg);
  file << (out.extension() == ".json" ? to_json(rows) : to_csv(rows));
  if (!file) throw std::runtime_error("write failed for " + out.string());
  return rows;
}

}  // namespace monotree
