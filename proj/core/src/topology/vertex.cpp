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

#include "twistcube/topology/vertex.hpp"

#include <bit>

#include "twistcube/errors.hpp"

namespace twistcube {

Vertex from_coordinates(std::span<const int> coords) {
  if (coords.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw ValidationError("tuple longer than the maximum dimension");
  }
  Word w = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0 && coords[i] != 1) {
      throw ValidationError("coordinates must be 0 or 1");
    }
    w |= static_cast<Word>(coords[i]) << i;
  }
  return Vertex(w);
}

std::vector<int> to_coordinates(Vertex v, int n) {
  std::vector<int> coords(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) coords[static_cast<std::size_t>(i - 1)] = coordinate(v, i);
  return coords;
}

std::string to_tuple_string(Vertex v, int n) {
  std::string out = "(";
  for (int i = 1; i <= n; ++i) {
    if (i > 1) out += ',';
    out += static_cast<char>('0' + coordinate(v, i));
  }
  out += ')';
  return out;
}

int generation_number(Vertex x, Vertex y, int n) {
  if (n < 1 || n > kMaxDimension) throw ValidationError("dimension out of range");
  if ((x.word >> n) != 0 || (y.word >> n) != 0) {
    throw DomainError("vertex word exceeds 2^n");
  }
  const Word diff = x.word ^ y.word;
  if (diff == 0) throw DomainError("generation number of a vertex with itself is undefined");
  return 32 - std::countl_zero(diff);
}

std::vector<Vertex> instance_set(Vertex x, int s, int n) {
  if (n < 0 || n > kMaxDimension || s < 0 || s > n) {
    throw ValidationError("instance level out of range");
  }
  if ((x.word >> n) != 0) throw ValidationError("vertex word exceeds 2^n");
  const Word low_mask = (Word{1} << s) - 1;
  const Word base = x.word & ~low_mask;
  std::vector<Vertex> out;
  out.reserve(std::size_t{1} << s);
  for (Word p = 0; p <= low_mask; ++p) {
    out.emplace_back(base | p);
    if (p == low_mask) break;
  }
  return out;
}

}  // namespace twistcube
