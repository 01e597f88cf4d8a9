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

#include "twistcube/topology/graph.hpp"
#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, std::uint32_t source);

// Largest BFS distance from `source`. Throws DomainError if some vertex is
// unreachable.
int eccentricity(const Graph& g, std::uint32_t source);

// Eccentricity of every vertex, computed 64 sources at a time with bit-parallel
// frontiers. Throws DomainError on a disconnected graph.
std::vector<int> all_eccentricities(const Graph& g);

// ceil((n-1) / log2 n), the lower bound on the diameter of any twisted
// hypercube of dimension n (1 for n <= 2).
int diameter_lower_bound(int n);

// Exact diameter. Runs one BFS per vertex, so it refuses cubes with more than
// 2^16 vertices unless `force` is set.
int diameter_exact(const TwistedCube& cube, bool force = false);
int diameter_exact(const Graph& g);

struct DiameterBounds {
  int lower = 0;                 // max eccentricity seen, after double sweeps
  int upper = 0;                 // n (plus the base graph diameter, if any)
  int theoretical_lower = 0;     // diameter_lower_bound(n)
  std::uint32_t witness = 0;     // a vertex attaining `lower`
  int sources = 0;               // BFS runs performed
};

// Sampled bounds for cubes too large for the exact computation: random
// sources, each followed by a BFS from its farthest vertex.
DiameterBounds diameter_bounds(const TwistedCube& cube, int samples, std::uint64_t seed);

}  // namespace twistcube
