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

#include <vector>

#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

struct Hop {
  Vertex vertex;   // vertex reached by this hop
  int generation;  // generation of the edge taken; 0 for a base-graph edge

  friend bool operator==(const Hop&, const Hop&) = default;
};

struct RouteTrace {
  Vertex source;
  Vertex target;
  std::vector<Hop> hops;

  int length() const { return static_cast<int>(hops.size()); }
};

// Suffix-fixing route: while the twist coordinates differ, cross the edge of
// the largest differing generation. Every hop fixes that coordinate and leaves
// the higher ones alone, so the route takes at most n twist hops. With a base
// graph the remaining base index is fixed by a shortest path inside H.
// source == target yields an empty trace.
RouteTrace greedy_route(const TwistedCube& cube, Vertex source, Vertex target);

// Consecutive vertices adjacent via the recorded generation, last vertex equal
// to the target, and twist generations strictly decreasing.
bool is_valid_route(const TwistedCube& cube, const RouteTrace& trace);

}  // namespace twistcube
