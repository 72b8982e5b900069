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

#ifndef MONOTREE_PSEUDORANDOM_HPP_
#define MONOTREE_PSEUDORANDOM_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "monotree/graph.hpp"
#include "monotree/random.hpp"

namespace monotree {

/**
 * Parameters for the G(n,p) concentration checks. "Sets of size >> log n / p"
 * is read as |X| >= size_constant * ln(n) / p.
 */
struct PseudorandomConfig {
  double epsilon = 0.1;
  double size_constant = 10.0;
  std::size_t max_tuple = 6;
  std::size_t density_samples = 200;
  /// Sampled |X| = |Y|; 0 means ceil(size_constant * ln(n) / p).
  std::size_t set_size = 0;
  std::size_t tuple_samples = 100;

  /// Throws ParameterError unless epsilon > 0, size_constant > 0 and
  /// 1 <= max_tuple <= 6.
  void validate() const;
};

enum class CheckStatus { Ok, Vacuous, RegimeInvalid };

const char* to_string(CheckStatus status);

struct CheckResult {
  std::string label;
  CheckStatus status = CheckStatus::Ok;
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double expected = 0.0;
  /// Largest |observed - expected| / expected over all samples.
  double worst_deviation = 0.0;
  /// Up to eight failing samples, e.g. a vertex or a tuple.
  std::vector<std::vector<std::size_t>> witnesses;
  std::vector<std::string> notes;

  double pass_fraction() const { return samples ? static_cast<double>(passed) / static_cast<double>(samples) : 0.0; }
  /// True only for a non-vacuous, regime-valid check with no failures.
  bool all_passed() const { return status == CheckStatus::Ok && samples > 0 && failed == 0; }
};

struct CheckReport {
  std::string check;
  std::vector<CheckResult> results;
};

/// Random disjoint X, Y: |E(X,Y)| within (1 +- eps) p|X||Y|, plus a separate
/// "nonempty" result asserting E(X,Y) != {}.
CheckReport check_edge_density(const SimpleGraph& g, double p, const PseudorandomConfig& cfg, Seed seed);

/// Every vertex: degree within (1 +- eps) p n.
CheckReport check_degrees(const SimpleGraph& g, double p, const PseudorandomConfig& cfg);

/// For each i <= max_tuple, random i-sets: common neighbourhood (tuple
/// members excluded) within (1 +- eps) p^i n.
CheckReport check_common_neighbourhoods(const SimpleGraph& g, double p, const PseudorandomConfig& cfg, Seed seed);

}  // namespace monotree

#endif  // MONOTREE_PSEUDORANDOM_HPP_
