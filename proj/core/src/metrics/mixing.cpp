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

#include "twistcube/metrics/mixing.hpp"

#include <cmath>

#include "twistcube/errors.hpp"
#include "twistcube/topology/graph.hpp"

namespace twistcube {

MixingProfile mixing_profile(const TwistedCube& cube, int t_max, Vertex start, double threshold, bool force) {
  constexpr std::size_t kLimit = std::size_t{1} << 16;
  if (cube.vertex_count() > kLimit && !force) {
    throw GuardError("mixing profile keeps a dense distribution; limited to 2^16 vertices");
  }
  if (t_max < 0) throw ValidationError("t_max must be non-negative");
  if (!cube.contains(start)) throw ValidationError("start vertex out of range");

  const Graph g = to_graph(cube, force);
  const auto n = g.vertex_count();
  std::vector<double> stationary(n);
  const double volume = 2.0 * static_cast<double>(g.edge_count());
  for (std::uint32_t v = 0; v < n; ++v) stationary[v] = g.degree(v) / volume;

  std::vector<double> p(n, 0.0), next(n, 0.0), outflow(n, 0.0);
  p[start.word] = 1.0;
  auto total_variation = [&] {
    double sum = 0.0;
    for (std::uint32_t v = 0; v < n; ++v) sum += std::abs(p[v] - stationary[v]);
    return 0.5 * sum;
  };

  MixingProfile profile;
  profile.start = start;
  profile.threshold = threshold;
  profile.tv.reserve(static_cast<std::size_t>(t_max) + 1);
  for (int t = 0;; ++t) {
    profile.tv.push_back(total_variation());
    if (!profile.t_mix && profile.tv.back() <= threshold) profile.t_mix = t;
    if (t == t_max) break;
    for (std::uint32_t v = 0; v < n; ++v) outflow[v] = p[v] / (2.0 * g.degree(v));
    for (std::uint32_t v = 0; v < n; ++v) {
      double in = 0.0;
      for (auto u : g.neighbors(v)) in += outflow[u];
      next[v] = 0.5 * p[v] + in;
    }
    p.swap(next);
  }
  return profile;
}

}  // namespace twistcube
