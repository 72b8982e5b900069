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

#ifndef MONOTREE_JSON_IO_HPP_
#define MONOTREE_JSON_IO_HPP_

#include "json.hpp"

#include "monotree/components.hpp"
#include "monotree/hypergraph.hpp"
#include "monotree/pseudorandom.hpp"
#include "monotree/solver.hpp"

namespace monotree {

using Json = nlohmann::ordered_json;

Json to_json(ComponentRef ref);
/// {"red": [[0,1,2]], "green": [[0],[1],[2]], "blue": ...}
Json to_json(const ComponentLabelling& labelling);
/// Parts, hyperedges with witnesses.
Json to_json(const ComponentHypergraph& h);
Json to_json(const TreeCover& cover);
Json to_json(const TraceReport& trace);
/// {"cover": [...], "size": k, "trace": {...}}
Json to_json(const Solution& solution);
Json to_json(const CheckReport& report);
Json to_json(const Verdict& verdict);

}  // namespace monotree

#endif  // MONOTREE_JSON_IO_HPP_
