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

#ifndef MONOTREE_RANDOM_HPP_
#define MONOTREE_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace monotree {

/**
 * Seeds and the reproducible random stream.
 *
 * The generator is std::mt19937_64, whose output sequence is fixed by the
 * C++ standard. Child seeds for trials and sub-streams are derived with the
 * SplitMix64 finalizer applied to (parent, index); they never reuse a parent
 * stream sequentially. Uniform variates are produced here rather than through
 * <random> distributions, whose algorithms are implementation-defined.
 */
struct Seed {
  std::uint64_t value = 0;

  /// SplitMix64 finalizer of (value + golden * (index + 1)).
  Seed child(std::uint64_t index) const;

  friend bool operator==(const Seed&, const Seed&) = default;
};

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.value) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound); bound > 0. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace monotree

#endif  // MONOTREE_RANDOM_HPP_
