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

#include "twistcube/spectral/cycles.hpp"

#include <numeric>

#include "twistcube/errors.hpp"

namespace twistcube {

namespace {

constexpr int kMaxCycleLength = 8;

void check_length(int k, bool force) {
  if (k < 0) throw ValidationError("cycle length bound must be non-negative");
  if (k > kMaxCycleLength && !force) throw GuardError("cycle enumeration is limited to length 8");
}

// Counts closed simple paths v -> ... -> v of every length <= k. Each cycle is
// traversed once in each direction.
template <class ForEachNeighbor>
std::vector<std::uint64_t> count_cycles(std::size_t vertex_count, std::uint32_t v, int k,
                                        ForEachNeighbor&& for_each) {
  std::vector<std::uint64_t> directed(static_cast<std::size_t>(k) + 1, 0);
  std::vector<char> on_path(vertex_count, 0);
  on_path[v] = 1;
  auto dfs = [&](auto&& self, std::uint32_t x, int length) -> void {
    for_each(x, [&](std::uint32_t y) {
      if (y == v) {
        if (length + 1 >= 3) ++directed[static_cast<std::size_t>(length) + 1];
        return;
      }
      if (on_path[y] || length + 1 >= k) return;
      on_path[y] = 1;
      self(self, y, length + 1);
      on_path[y] = 0;
    });
  };
  if (k >= 3) dfs(dfs, v, 0);
  for (auto& c : directed) c /= 2;
  return directed;
}

}  // namespace

std::vector<std::uint64_t> cycles_by_length(const TwistedCube& cube, Vertex v, int k, bool force) {
  check_length(k, force);
  if (!cube.contains(v)) throw ValidationError("vertex out of range");
  return count_cycles(cube.vertex_count(), v.word, k, [&cube](std::uint32_t x, auto&& f) {
    cube.for_each_neighbor(Vertex(x), [&](Vertex y, int) { f(y.word); });
  });
}

std::vector<std::uint64_t> cycles_by_length(const Graph& g, std::uint32_t v, int k, bool force) {
  check_length(k, force);
  if (v >= g.vertex_count()) throw ValidationError("vertex out of range");
  return count_cycles(g.vertex_count(), v, k, [&g](std::uint32_t x, auto&& f) {
    for (auto y : g.neighbors(x)) f(y);
  });
}

std::uint64_t cycle_count(const TwistedCube& cube, Vertex v, int k, bool force) {
  const auto counts = cycles_by_length(cube, v, k, force);
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t cycle_count(const Graph& g, std::uint32_t v, int k, bool force) {
  const auto counts = cycles_by_length(g, v, k, force);
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

}  // namespace twistcube
