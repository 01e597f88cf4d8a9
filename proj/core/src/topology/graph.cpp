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

#include "twistcube/topology/graph.hpp"

#include <algorithm>
#include <string>

#include "twistcube/errors.hpp"

namespace twistcube {

Graph Graph::from_adjacency(const AdjacencyList& adjacency) {
  const auto n = static_cast<std::uint32_t>(adjacency.size());
  Graph g;
  g.offsets_.reserve(adjacency.size() + 1);
  g.offsets_.push_back(0);
  for (std::uint32_t u = 0; u < n; ++u) {
    const auto& list = adjacency[u];
    for (auto v : list) {
      if (v >= n) throw ValidationError("neighbor out of range at vertex " + std::to_string(u));
      if (v == u) throw ValidationError("self-loop at vertex " + std::to_string(u));
      g.targets_.push_back(v);
    }
    g.offsets_.push_back(static_cast<std::uint32_t>(g.targets_.size()));
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    auto list = g.neighbors(u);
    std::vector<std::uint32_t> sorted(list.begin(), list.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ValidationError("repeated edge at vertex " + std::to_string(u));
    }
    for (auto v : list) {
      if (!g.has_edge(v, u)) throw ValidationError("adjacency is not symmetric");
    }
  }
  return g;
}

Graph Graph::from_edges(std::uint32_t vertex_count, const std::vector<Edge>& edges) {
  AdjacencyList adjacency(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw ValidationError("edge endpoint out of range");
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  return from_adjacency(adjacency);
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
  const auto list = neighbors(u);
  return std::find(list.begin(), list.end(), v) != list.end();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::uint32_t u = 0; u < vertex_count(); ++u) {
    for (auto v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AdjacencyList Graph::to_adjacency() const {
  AdjacencyList out(vertex_count());
  for (std::uint32_t u = 0; u < vertex_count(); ++u) {
    const auto list = neighbors(u);
    out[u].assign(list.begin(), list.end());
  }
  return out;
}

Graph to_graph(const TwistedCube& cube, bool force) {
  constexpr std::size_t kLimit = std::size_t{1} << 24;
  if (cube.vertex_count() > kLimit && !force) {
    throw GuardError("materializing " + std::to_string(cube.vertex_count()) +
                     " vertices exceeds the 2^24 limit");
  }
  AdjacencyList adjacency(cube.vertex_count());
  for (std::size_t x = 0; x < cube.vertex_count(); ++x) {
    auto& list = adjacency[x];
    list.reserve(static_cast<std::size_t>(cube.dimension()));
    cube.for_each_neighbor(Vertex(static_cast<Word>(x)), [&](Vertex y, int) { list.push_back(y.word); });
  }
  // Twist edges are simple by construction; no validation pass.
  Graph g;
  g.offsets_.push_back(0);
  for (const auto& list : adjacency) {
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(static_cast<std::uint32_t>(g.targets_.size()));
  }
  return g;
}

}  // namespace twistcube
