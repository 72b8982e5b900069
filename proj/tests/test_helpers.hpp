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

#ifndef MONOTREE_TESTS_TEST_HELPERS_HPP_
#define MONOTREE_TESTS_TEST_HELPERS_HPP_

#include <cstddef>
#include <initializer_list>
#include <tuple>

#include "monotree/graph.hpp"

namespace monotree::testing {

inline ColouredGraph make_graph(std::size_t n, std::initializer_list<std::tuple<Vertex, Vertex, Colour>> edges) {
  ColouredGraph cg(n);
  for (const auto& [u, v, c] : edges) cg.add_edge(u, v, c);
  return cg;
}

inline ColouredGraph monochrome_complete(std::size_t n, Colour c) {
  ColouredGraph cg(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) cg.add_edge(u, v, c);
  return cg;
}

/// K6 minus the triangle {0,1,2}.
inline SimpleGraph k6_minus_triangle() {
  SimpleGraph g(6);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (v > 2) g.add_edge(u, v);
  return g;
}

inline ColouredGraph three_star_k6() { return colour_three_stars(k6_minus_triangle(), 0, 1, 2, Colour::Red); }

/// G(n,p) with a uniformly random 3-colouring, both derived from the seed.
inline ColouredGraph random_coloured(std::size_t n, double p, Seed seed) {
  return colour_random(generate_gnp(n, p, seed.child(0)), seed.child(1));
}

}  // namespace monotree::testing

#endif  // MONOTREE_TESTS_TEST_HELPERS_HPP_
