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

#include "twistcube/metrics/routing.hpp"

#include <algorithm>
#include <bit>

#include "twistcube/errors.hpp"

namespace twistcube {

namespace {

// Shortest path in the base graph, excluding `from`, including `to`.
std::vector<std::uint32_t> base_path(const BaseGraph& base, std::uint32_t from, std::uint32_t to) {
  std::vector<std::int64_t> parent(base.vertex_count, -1);
  std::vector<std::uint32_t> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size() && parent[to] < 0; ++head) {
    const auto u = queue[head];
    for (auto v : base.adjacency[u]) {
      if (parent[v] < 0) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[to] < 0) throw DomainError("base graph is disconnected; no route exists");
  std::vector<std::uint32_t> path;
  for (auto v = to; v != from; v = static_cast<std::uint32_t>(parent[v])) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

RouteTrace greedy_route(const TwistedCube& cube, Vertex source, Vertex target) {
  if (!cube.contains(source) || !cube.contains(target)) {
    throw ValidationError("route endpoint out of range");
  }
  RouteTrace trace{source, target, {}};
  const Word h = cube.base_size();
  Vertex current = source;
  for (;;) {
    const Word diff = (current.word / h) ^ (target.word / h);
    if (diff == 0) break;
    const int k = 32 - std::countl_zero(diff);
    current = cube.neighbor_unchecked(current, k);
    trace.hops.push_back({current, k});
  }
  if (current != target) {
    const Word copy = current.word - current.word % h;
    for (auto b : base_path(*cube.spec().base, current.word % h, target.word % h)) {
      trace.hops.push_back({Vertex(copy + b), 0});
    }
  }
  return trace;
}

bool is_valid_route(const TwistedCube& cube, const RouteTrace& trace) {
  Vertex current = trace.source;
  int last_generation = cube.dimension() + 1;
  for (const auto& hop : trace.hops) {
    if (hop.generation > 0) {
      if (hop.generation >= last_generation) return false;
      if (cube.neighbor(current, hop.generation) != hop.vertex) return false;
      last_generation = hop.generation;
    } else {
      const auto nbrs = cube.neighbors(current);
      if (std::find(nbrs.begin(), nbrs.end(), hop.vertex) == nbrs.end()) return false;
      if (cube.generation(current, hop.vertex) != 0) return false;
      last_generation = 0;
    }
    current = hop.vertex;
  }
  return current == trace.target;
}

}  // namespace twistcube
