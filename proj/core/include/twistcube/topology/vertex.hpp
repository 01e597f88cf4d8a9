// Copyright 2026 The twistcube Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace twistcube {

using Word = std::uint32_t;

// Largest dimension accepted for construction and neighbor queries.
inline constexpr int kMaxDimension = 28;

// A point of {0,1}^n. Coordinate i (1-based) lives at bit i-1, so the
// prefix (x_1, ..., x_{k-1}) is the low k-1 bits of the word.
struct Vertex {
  Word word = 0;

  constexpr Vertex() = default;
  constexpr explicit Vertex(Word w) : word(w) {}

  constexpr auto operator<=>(const Vertex&) const = default;
};

// Value (0 or 1) of 1-based coordinate `i`.
constexpr int coordinate(Vertex v, int i) {
  return static_cast<int>((v.word >> (i - 1)) & 1U);
}

// Builds a vertex from the tuple (x_1, ..., x_n); coords[0] is x_1.
Vertex from_coordinates(std::span<const int> coords);

// Inverse of from_coordinates for dimension n.
std::vector<int> to_coordinates(Vertex v, int n);

// "(x_1,...,x_n)".
std::string to_tuple_string(Vertex v, int n);

// Largest coordinate at which x and y differ. For adjacent vertices this is
// the generation of the twist that created the edge. Throws DomainError when
// x == y or either word has bits above n.
int generation_number(Vertex x, Vertex y, int n);

// I_s(x): every vertex agreeing with x on coordinates s+1..n, in increasing
// word order. |I_s(x)| = 2^s.
std::vector<Vertex> instance_set(Vertex x, int s, int n);

}  // namespace twistcube
