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
#include <string>
#include <vector>

#include "twistcube/topology/graph.hpp"
#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

// A bipartition (A, V \ A) whose crossing edges share no endpoint. `side` is
// the bitmask of A, the side that contains vertex 0.
struct MatchingCut {
  std::uint64_t side = 0;
  std::size_t crossing_edges = 0;
  bool trivial = false;  // the top generation cut V^0 | V^1

  friend bool operator==(const MatchingCut&, const MatchingCut&) = default;
};

// Lower-case hex of `mask`, zero-padded to ceil(vertex_count / 4) digits.
std::string mask_to_hex(std::uint64_t mask, std::uint32_t vertex_count);

// Every matching cut with both sides non-empty, by exhaustive enumeration of
// the 2^(N-1) - 1 bipartitions. Refuses more than 24 vertices unless `force`
// (hard limit 63). Results are sorted by `side`.
std::vector<MatchingCut> matching_cut_search(const Graph& g, bool force = false);

// Same, with the top generation cut flagged as trivial.
std::vector<MatchingCut> matching_cut_search(const TwistedCube& cube, bool force = false);

}  // namespace twistcube
