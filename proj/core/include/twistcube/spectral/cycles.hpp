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

// by_length[l] = number of distinct simple cycles of length l through v, for
// l = 0..k (entries below 3 are zero). A cycle is its vertex and edge set, so
// rotations and reversals count once. Lengths above 8 are refused unless
// `force` is set.
std::vector<std::uint64_t> cycles_by_length(const TwistedCube& cube, Vertex v, int k, bool force = false);
std::vector<std::uint64_t> cycles_by_length(const Graph& g, std::uint32_t v, int k, bool force = false);

// theta(v, k): simple cycles through v of length at most k.
std::uint64_t cycle_count(const TwistedCube& cube, Vertex v, int k, bool force = false);
std::uint64_t cycle_count(const Graph& g, std::uint32_t v, int k, bool force = false);

}  // namespace twistcube
