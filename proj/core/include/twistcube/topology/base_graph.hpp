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
#include <utility>
#include <vector>

namespace twistcube {

using AdjacencyList = std::vector<std::vector<std::uint32_t>>;

// Simple undirected graph H used in place of the single starting vertex.
struct BaseGraph {
  std::uint32_t vertex_count = 1;
  AdjacencyList adjacency{{}};

  // Throws ValidationError on endpoints out of range, self-loops or repeated
  // edges. Neighbor lists come out sorted.
  static BaseGraph from_edges(std::uint32_t vertex_count,
                              const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  // Symmetric, loop-free, duplicate-free; throws ValidationError otherwise.
  void validate() const;

  // Each undirected edge once, as (u, v) with u < v, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  bool is_single_vertex() const { return vertex_count == 1; }

  friend bool operator==(const BaseGraph&, const BaseGraph&) = default;
};

}  // namespace twistcube
