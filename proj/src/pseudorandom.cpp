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

#include "monotree/pseudorandom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monotree/errors.hpp"

namespace monotree {

namespace {

constexpr std::size_t kMaxWitnesses = 8;

/// k distinct vertices of [0, n) by partial Fisher-Yates.
std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
  pool.resize(k);
  return pool;
}

void record(CheckResult& r, double observed, double expected, double eps, std::vector<std::size_t> witness) {
  ++r.samples;
  const double dev = expected > 0 ? std::abs(observed - expected) / expected : (observed == 0 ? 0.0 : INFINITY);
  r.worst_deviation = std::max(r.worst_deviation, dev);
  if (dev <= eps) {
    ++r.passed;
  } else {
    ++r.failed;
    if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(witness));
  }
}

}  // namespace

void PseudorandomConfig::validate() const {
  if (!(epsilon > 0)) throw ParameterError("epsilon must be positive");
  if (!(size_constant > 0)) throw ParameterError("size constant must be positive");
  if (max_tuple < 1 || max_tuple > 6) throw ParameterError("max_tuple must lie in [1, 6]");
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Ok:
      return "ok";
    case CheckStatus::Vacuous:
      return "vacuous";
    case CheckStatus::RegimeInvalid:
      return "regime-invalid";
  }
  return "?";
}

CheckReport check_edge_density(const SimpleGraph& g, double p, const PseudorandomConfig& cfg, Seed seed) {
  cfg.validate();
  if (!(p > 0 && p <= 1)) throw ParameterError("p must lie in (0, 1]");
  const std::size_t n = g.num_vertices();
  CheckReport report{"edge_density", {}};
  CheckResult density;
  density.label = "density";
  CheckResult nonempty;
  nonempty.label = "nonempty";

  const double min_size = n > 1 ? cfg.size_constant * std::log(static_cast<double>(n)) / p : INFINITY;
  const std::size_t size =
      cfg.set_size > 0 ? cfg.set_size : (std::isfinite(min_size) ? static_cast<std::size_t>(std::ceil(min_size)) : n + 1);
  const std::string threshold_note = "minimum qualifying size C ln n / p = " + std::to_string(min_size);
  if (2 * size > n || size == 0) {
    for (CheckResult* r : {&density, &nonempty}) {
      r->status = CheckStatus::Vacuous;
      r->notes.push_back("n = " + std::to_string(n) + " too small for two disjoint sets of size " + std::to_string(size));
    }
    report.results = {density, nonempty};
    return report;
  }
  if (static_cast<double>(size) < min_size) {
    density.notes.push_back("below_size_threshold: |X| = " + std::to_string(size) + " < " + threshold_note);
    nonempty.notes = density.notes;
  }
  density.expected = p * static_cast<double>(size) * static_cast<double>(size);
  nonempty.expected = 1.0;

  Rng rng(seed);
  for (std::size_t s = 0; s < cfg.density_samples; ++s) {
    const auto picked = sample_distinct(n, 2 * size, rng);
    Bitset y_mask(n);
    for (std::size_t i = size; i < 2 * size; ++i) y_mask.set(picked[i]);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < size; ++i) edges += g.neighbours(picked[i]).intersection_count(y_mask);
    record(density, static_cast<double>(edges), density.expected, cfg.epsilon, {s, edges});
    ++nonempty.samples;
    if (edges > 0) {
      ++nonempty.passed;
    } else {
      ++nonempty.failed;
      if (nonempty.witnesses.size() < kMaxWitnesses) nonempty.witnesses.push_back({s});
    }
  }
  report.results = {density, nonempty};
  return report;
}

CheckReport check_degrees(const SimpleGraph& g, double p, const PseudorandomConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  CheckReport report{"degrees", {}};
  CheckResult r;
  r.label = "degree";
  r.expected = p * static_cast<double>(n);
  if (n == 0) {
    r.status = CheckStatus::Vacuous;
    r.notes.push_back("empty graph");
  } else {
    if (cfg.epsilon < 1.0 / static_cast<double>(n))
      r.notes.push_back("epsilon < 1/n: a complete graph cannot pass (degree n-1 against p n)");
    for (Vertex v = 0; v < n; ++v) record(r, static_cast<double>(g.degree(v)), r.expected, cfg.epsilon, {v, g.degree(v)});
  }
  report.results.push_back(std::move(r));
  return report;
}

CheckReport check_common_neighbourhoods(const SimpleGraph& g, double p, const PseudorandomConfig& cfg, Seed seed) {
  cfg.validate();
  const std::size_t n = g.num_vertices();
  CheckReport report{"common_neighbourhoods", {}};
  for (std::size_t i = 1; i <= cfg.max_tuple; ++i) {
    CheckResult r;
    r.label = "i=" + std::to_string(i);
    r.expected = std::pow(p, static_cast<double>(i)) * static_cast<double>(n);
    if (n < i) {
      r.status = CheckStatus::Vacuous;
      r.notes.push_back("fewer than i vertices");
    } else if (r.expected < 1.0 / cfg.epsilon) {
      r.status = CheckStatus::RegimeInvalid;
      r.notes.push_back("p^i n = " + std::to_string(r.expected) + " < 1/epsilon");
    } else {
      Rng rng(seed.child(i));
      for (std::size_t s = 0; s < cfg.tuple_samples; ++s) {
        auto tuple = sample_distinct(n, i, rng);
        Bitset common(n, true);
        for (std::size_t v : tuple) common &= g.neighbours(v);
        for (std::size_t v : tuple) common.reset(v);
        const std::size_t count = common.count();
        std::sort(tuple.begin(), tuple.end());
        tuple.push_back(count);
        record(r, static_cast<double>(count), r.expected, cfg.epsilon, std::move(tuple));
      }
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace monotree
