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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

// Compressed adjacency of a simple undirected graph. Analyses that sweep the
// whole vertex set work on this view instead of recomputing twist neighbors.
class Graph {
 public:
  Graph() = default;

  // Throws ValidationError unless the lists describe a simple undirected graph.
  static Graph from_adjacency(const AdjacencyList& adjacency);
  static Graph from_edges(std::uint32_t vertex_count, const std::vector<Edge>& edges);

  std::uint32_t vertex_count() const {
    return offsets_.empty() ? 0 : static_cast<std::uint32_t>(offsets_.size() - 1);
  }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(std::uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(std::uint32_t u, std::uint32_t v) const;

  // Every edge once as (u, v), u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  AdjacencyList to_adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph to_graph(const TwistedCube& cube, bool force);

  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

// Materializes the cube; neighbor order follows TwistedCube::neighbors.
// Throws GuardError above 2^24 vertices unless `force` is set.
Graph to_graph(const TwistedCube& cube, bool force = false);

}  // namespace twistcube
