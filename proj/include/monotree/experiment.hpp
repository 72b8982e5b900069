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

#ifndef MONOTREE_EXPERIMENT_HPP_
#define MONOTREE_EXPERIMENT_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "monotree/random.hpp"
#include "monotree/solver.hpp"

namespace monotree {

enum class ColouringMode { Random, ThreeStar };

const char* to_string(ColouringMode mode);

/// One (n, p, mode) cell of the probe grid.
struct Cell {
  std::size_t n = 0;
  double p = 0.0;
  ColouringMode mode = ColouringMode::Random;
};

struct ExperimentConfig {
  std::vector<std::size_t> n_values;
  /// Explicit probabilities; used when p_exponent is unset.
  std::vector<double> p_values;
  /// p = scale * (ln n / n)^exponent for each scale, clamped to 1.
  std::optional<double> p_exponent;
  std::vector<double> p_scales{1.0};
  std::size_t trials = 1;
  std::vector<ColouringMode> modes{ColouringMode::Random};
  Seed seed{};
  bool exact_oracle = true;
  /// The oracle is skipped for hypergraphs with more vertices than this.
  std::size_t exact_component_limit = 60;
  /// 0 = hardware concurrency. MONOTREE_THREADS caps either value.
  std::size_t threads = 0;
  SolverConfig solver{};

  /// Throws ParameterError on an empty grid, trials == 0, p outside (0, 1],
  /// or n < 4 with three-star mode.
  void validate() const;
  /// Sorted by (n, p, mode).
  std::vector<Cell> cells() const;
};

struct TrialRecord {
  std::size_t n = 0;
  double p = 0.0;
  std::size_t trial = 0;
  ColouringMode mode = ColouringMode::Random;
  /// Three-star mode found no independent triple in G.
  bool skipped = false;
  std::size_t cover_size = 0;
  Branch branch = Branch::ExactFallback;
  std::optional<std::size_t> exact_minimum;
  bool verified = false;
  double wall_ms = 0.0;
};

/// Seed of one trial, derived from (seed, n, p, mode, trial).
Seed trial_seed(Seed seed, const Cell& cell, std::size_t trial);

/// Generates G(n,p), colours it, solves and verifies; the oracle runs when
/// `exact_oracle` is set and H has at most `exact_component_limit` vertices.
TrialRecord run_trial(const Cell& cell, std::size_t trial, const ExperimentConfig& cfg);

struct CellSummary {
  Cell cell;
  std::size_t trials = 0;  // completed trials
  double frac_le3 = 0.0;
  double mean_size = 0.0;
  /// Indexed by Branch.
  std::array<std::size_t, 7> branches{};
  bool exact_available = false;
};

/// Runs every trial of every cell (in parallel) and folds them in
/// (cell, trial) order. Records, when requested, are in the same order.
std::vector<CellSummary> run_probe(const ExperimentConfig& cfg, std::vector<TrialRecord>* records = nullptr);

/// Fold of one cell's records.
CellSummary summarize(const Cell& cell, const std::vector<TrialRecord>& records);

inline constexpr const char* kCsvHeader =
    "n,p,mode,trials,frac_le3,mean_size,branch_egp,branch_a3,branch_konig,branch_case1,branch_case2,"
    "branch_case3,branch_fallback,exact_available";

std::string to_csv(const std::vector<CellSummary>& rows);
std::string to_json(const std::vector<CellSummary>& rows);

/// Opens `out` first (an unwritable path fails before any trial runs), then
/// writes CSV, or JSON when the extension is .json.
std::vector<CellSummary> probe_threshold(const ExperimentConfig& cfg, const std::filesystem::path& out);

/// Thread count after applying MONOTREE_THREADS.
std::size_t effective_threads(std::size_t requested);

}  // namespace monotree

#endif  // MONOTREE_EXPERIMENT_HPP_
