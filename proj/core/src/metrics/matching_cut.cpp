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

#include "twistcube/metrics/matching_cut.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

#include "twistcube/errors.hpp"

namespace twistcube {

std::string mask_to_hex(std::uint64_t mask, std::uint32_t vertex_count) {
  const int digits = std::max(1, static_cast<int>((vertex_count + 3) / 4));
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%0*llx", digits, static_cast<unsigned long long>(mask));
  return buffer;
}

std::vector<MatchingCut> matching_cut_search(const Graph& g, bool force) {
  const auto n = g.vertex_count();
  if (n > 24 && !force) {
    throw GuardError("matching cut search enumerates 2^(N-1) bipartitions; " + std::to_string(n) +
                     " vertices exceeds the 24-vertex limit");
  }
  if (n > 63) throw GuardError("matching cut search supports at most 63 vertices");
  std::vector<MatchingCut> out;
  if (n < 2) return out;
  std::vector<std::uint64_t> nbr(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (auto u : g.neighbors(v)) nbr[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  // `other` ranges over non-empty subsets of {1..N-1}; A is its complement.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 1; m < limit; ++m) {
    const std::uint64_t other = m << 1;
    const std::uint64_t side = all & ~other;
    bool matching = true;
    std::size_t crossing = 0;
    for (std::uint32_t v = 0; v < n && matching; ++v) {
      const std::uint64_t across = nbr[v] & (((side >> v) & 1U) ? other : side);
      const int count = std::popcount(across);
      if (count > 1) matching = false;
      crossing += static_cast<std::size_t>(count);
    }
    if (matching) out.push_back({side, crossing / 2, false});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.side < b.side; });
  return out;
}

std::vector<MatchingCut> matching_cut_search(const TwistedCube& cube, bool force) {
  auto cuts = matching_cut_search(to_graph(cube), force);
  const auto half = static_cast<std::uint32_t>(cube.vertex_count() / 2);
  const std::uint64_t top_side = (std::uint64_t{1} << half) - 1;
  for (auto& cut : cuts) cut.trivial = cut.side == top_side;
  return cuts;
}

}  // namespace twistcube
