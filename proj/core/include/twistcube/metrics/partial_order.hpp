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
#include <vector>

#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

// Order induced by orienting every twist edge from its 0-side to its 1-side,
// i.e. (x, 0) < (sigma(x), 1) at each level, closed under transitivity.
class PartialOrder {
 public:
  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(successors_.size()); }

  // Generating relations: v -> N_k(v) for each k with coordinate k of v = 0.
  const std::vector<std::vector<std::uint32_t>>& successors() const { return successors_; }

  // A topological order of the generating DAG (Kahn's algorithm, smallest
  // available vertex first).
  const std::vector<std::uint32_t>& topological_order() const { return topo_; }

  // x <= y in the order. Every generating edge increases the vertex word, so
  // the search never leaves [x, y].
  bool less_equal(std::uint32_t x, std::uint32_t y) const;

  // Row x holds the bitset of all y with x <= y. Refuses more than 2^12
  // vertices.
  std::vector<std::vector<std::uint64_t>> transitive_closure() const;

  // Vertices with no predecessor / no successor.
  std::vector<std::uint32_t> minimal_elements() const;
  std::vector<std::uint32_t> maximal_elements() const;

 private:
  friend PartialOrder partial_order_build(const TwistedCube& cube, bool force);

  std::vector<std::vector<std::uint32_t>> successors_;
  std::vector<std::uint32_t> indegree_;
  std::vector<std::uint32_t> topo_;
};

// Builds the order for cubes with at most 2^16 vertices (unless `force`).
// Throws InternalError if the generating relation has a cycle.
PartialOrder partial_order_build(const TwistedCube& cube, bool force = false);

}  // namespace twistcube
