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

#ifndef MONOTREE_COLOUR_HPP_
#define MONOTREE_COLOUR_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace monotree {

/// Edge colours. The enumerator order is the canonical tie-break order.
enum class Colour : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr std::size_t kNumColours = 3;
inline constexpr std::array<Colour, kNumColours> kColours = {Colour::Red, Colour::Green, Colour::Blue};

constexpr std::size_t index(Colour c) { return static_cast<std::size_t>(c); }
constexpr Colour colour_at(std::size_t i) { return static_cast<Colour>(i); }

constexpr char colour_char(Colour c) {
  switch (c) {
    case Colour::Red:
      return 'r';
    case Colour::Green:
      return 'g';
    case Colour::Blue:
      return 'b';
  }
  return '?';
}

constexpr std::string_view colour_name(Colour c) {
  switch (c) {
    case Colour::Red:
      return "red";
    case Colour::Green:
      return "green";
    case Colour::Blue:
      return "blue";
  }
  return "?";
}

constexpr std::optional<Colour> colour_from_char(char ch) {
  switch (ch) {
    case 'r':
      return Colour::Red;
    case 'g':
      return Colour::Green;
    case 'b':
      return Colour::Blue;
    default:
      return std::nullopt;
  }
}

std::optional<Colour> colour_from_name(std::string_view name);

}  // namespace monotree

#endif  // MONOTREE_COLOUR_HPP_
