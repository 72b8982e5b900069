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

#include "monotree/colour.hpp"

namespace monotree {

std::optional<Colour> colour_from_name(std::string_view name) {
  for (Colour c : kColours)
    if (name == colour_name(c) || (name.size() == 1 && name[0] == colour_char(c))) return c;
  return std::nullopt;
}

}  // namespace monotree
