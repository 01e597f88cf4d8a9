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

#include "twistcube/metrics/distance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "twistcube/errors.hpp"
#include "twistcube/topology/permutation.hpp"

namespace twistcube {

std::vector<int> bfs_distances(const Graph& g, std::uint32_t source) {
  const auto n = g.vertex_count();
  if (source >= n) throw ValidationError("source vertex out of range");
  std::vector<int> dist(n, -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    for (auto v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int eccentricity(const Graph& g, std::uint32_t source) {
  const auto dist = bfs_distances(g, source);
  int ecc = 0;
  for (int d : dist) {
    if (d < 0) throw DomainError("graph is disconnected");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

std::vector<int> all_eccentricities(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<int> ecc(n, 0);
  std::vector<std::uint64_t> visited(n), frontier(n), next(n);
  for (std::uint32_t first = 0; first < n; first += 64) {
    const std::uint32_t batch = std::min<std::uint32_t>(64, n - first);
    const std::uint64_t all = batch == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << batch) - 1;
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    for (std::uint32_t i = 0; i < batch; ++i) {
      visited[first + i] = frontier[first + i] = std::uint64_t{1} << i;
    }
    for (int level = 1;; ++level) {
      std::uint64_t grew = 0;
      for (std::uint32_t v = 0; v < n; ++v) {
        std::uint64_t reach = 0;
        for (auto u : g.neighbors(v)) reach |= frontier[u];
        reach &= ~visited[v];
        next[v] = reach;
        grew |= reach;
      }
      if (grew == 0) break;
      for (std::uint32_t v = 0; v < n; ++v) visited[v] |= next[v];
      frontier.swap(next);
      for (std::uint32_t i = 0; i < batch; ++i) {
        if ((grew >> i) & 1U) ecc[first + i] = level;
      }
    }
    std::uint64_t covered = all;
    for (std::uint32_t v = 0; v < n; ++v) covered &= visited[v];
    if (covered != all) throw DomainError("graph is disconnected");
  }
  return ecc;
}

int diameter_lower_bound(int n) {
  if (n <= 2) return n <= 0 ? 0 : 1;
  return static_cast<int>(std::ceil((n - 1) / std::log2(static_cast<double>(n)) - 1e-12));
}

int diameter_exact(const Graph& g) {
  const auto ecc = all_eccentricities(g);
  return ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

int diameter_exact(const TwistedCube& cube, bool force) {
  constexpr std::size_t kLimit = std::size_t{1} << 16;
  if (cube.vertex_count() > kLimit && !force) {
    throw GuardError("exact diameter needs one BFS per vertex; " + std::to_string(cube.vertex_count()) +
                     " vertices exceeds the 2^16 limit (use force)");
  }
  return diameter_exact(to_graph(cube, force));
}

namespace {

struct Sweep {
  int ecc;
  std::uint32_t farthest;
};

// BFS on the implicit cube with byte distances; the diameter of any twisted
// cube is far below 255.
Sweep sweep(const TwistedCube& cube, std::uint32_t source, std::vector<std::uint8_t>& dist,
            std::vector<std::uint32_t>& queue) {
  std::fill(dist.begin(), dist.end(), std::uint8_t{0xff});
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    cube.for_each_neighbor(Vertex(u), [&](Vertex v, int) {
      if (dist[v.word] == 0xff) {
        dist[v.word] = static_cast<std::uint8_t>(dist[u] + 1);
        queue.push_back(v.word);
      }
    });
  }
  if (queue.size() != cube.vertex_count()) throw DomainError("graph is disconnected");
  const auto last = queue.back();
  return {dist[last], last};
}

int base_diameter(const TwistedCube& cube) {
  if (!cube.has_base()) return 0;
  return diameter_exact(Graph::from_adjacency(cube.spec().base->adjacency));
}

}  // namespace

DiameterBounds diameter_bounds(const TwistedCube& cube, int samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("need at least one sample");
  DiameterBounds out;
  out.theoretical_lower = diameter_lower_bound(cube.dimension());
  out.upper = cube.dimension() + base_diameter(cube);
  std::vector<std::uint8_t> dist(cube.vertex_count());
  std::vector<std::uint32_t> queue;
  queue.reserve(cube.vertex_count());
  auto stream = task_stream(seed, 0);
  for (int s = 0; s < samples; ++s) {
    const auto source = static_cast<std::uint32_t>(stream.bounded(cube.vertex_count()));
    const Sweep first = sweep(cube, source, dist, queue);
    const Sweep second = sweep(cube, first.farthest, dist, queue);
    out.sources += 2;
    if (first.ecc > out.lower) {
      out.lower = first.ecc;
      out.witness = source;
    }
    if (second.ecc > out.lower) {
      out.lower = second.ecc;
      out.witness = first.farthest;
    }
  }
  return out;
}

}  // namespace twistcube
