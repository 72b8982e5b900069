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

#ifndef MONOTREE_CERTIFICATES_HPP_
#define MONOTREE_CERTIFICATES_HPP_

#include <cstddef>
#include <vector>

namespace monotree {

enum class CoverMethod { Exact, Konig, CaseAnalysis };

const char* to_string(CoverMethod method);

/// A vertex cover, as indices into the vertex numbering of the structure it
/// was computed for.
struct CoverCertificate {
  std::vector<std::size_t> cover;
  CoverMethod method = CoverMethod::Exact;

  std::size_t size() const { return cover.size(); }
};

/// A matching, as indices into the edge (or hyperedge) list it was computed for.
struct MatchingCertificate {
  std::vector<std::size_t> members;

  std::size_t size() const { return members.size(); }
};

}  // namespace monotree

#endif  // MONOTREE_CERTIFICATES_HPP_
