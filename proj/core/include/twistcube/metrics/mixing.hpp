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

#include <optional>
#include <vector>

#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

struct MixingProfile {
  Vertex start;
  double threshold = 0.25;
  std::vector<double> tv;     // tv[t] for t = 0..t_max
  std::optional<int> t_mix;   // first t with tv[t] <= threshold
};

// Exact evolution of the lazy walk (hold with probability 1/2, otherwise step
// to a uniform neighbor) from a point mass at `start`, measured in total
// variation against the stationary distribution (uniform on regular cubes).
// Keeps a dense distribution, so refuses more than 2^16 vertices unless
// `force` is set.
MixingProfile mixing_profile(const TwistedCube& cube, int t_max, Vertex start = Vertex(0),
                             double threshold = 0.25, bool force = false);

}  // namespace twistcube
