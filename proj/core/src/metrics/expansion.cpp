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

#include "twistcube/metrics/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "twistcube/errors.hpp"
#include "twistcube/topology/graph.hpp"

namespace twistcube {

namespace {

constexpr std::uint8_t kNotReached = 0xff;

// Reusable buffers for repeated boundary evaluations on one cube.
struct BoundaryScratch {
  std::vector<char> member;
  std::vector<std::uint8_t> first_generation;
  std::vector<Word> touched;

  explicit BoundaryScratch(std::size_t n) : member(n, 0), first_generation(n, kNotReached) {}
};

ExpansionReport boundary_with(const TwistedCube& cube, std::span<const Vertex> set, BoundaryScratch& scratch) {
  const int n = cube.dimension();
  for (const auto& v : set) {
    if (!cube.contains(v)) throw ValidationError("set contains an out-of-range vertex");
    if (scratch.member[v.word]) {
      for (const auto& u : set) scratch.member[u.word] = 0;
      throw ValidationError("set repeats vertex " + std::to_string(v.word));
    }
    scratch.member[v.word] = 1;
  }
  scratch.touched.clear();
  for (const auto& v : set) {
    cube.for_each_neighbor(v, [&](Vertex y, int generation) {
      if (scratch.member[y.word]) return;
      auto& g = scratch.first_generation[y.word];
      if (g == kNotReached) scratch.touched.push_back(y.word);
      g = std::min<std::uint8_t>(g, static_cast<std::uint8_t>(generation));
    });
  }
  ExpansionReport report;
  report.set_size = set.size();
  report.boundary_size = scratch.touched.size();
  report.ratio = static_cast<double>(report.boundary_size) / static_cast<double>(report.set_size);
  report.by_generation.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto w : scratch.touched) {
    ++report.by_generation[scratch.first_generation[w]];
    scratch.first_generation[w] = kNotReached;
  }
  std::partial_sum(report.by_generation.begin(), report.by_generation.end(), report.by_generation.begin());
  for (const auto& v : set) scratch.member[v.word] = 0;
  return report;
}

void check_probe_args(double eta, double alpha) {
  if (!(eta > 0.0 && eta < 1.0)) throw ValidationError("eta must lie in (0, 1)");
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
}

void record(ProbeReport& report, ProbeFamily& family, const ExpansionReport& r, std::span<const Vertex> set) {
  ++family.sets;
  ++report.sets;
  const bool below = r.ratio < report.alpha;
  family.below_alpha += below ? 1 : 0;
  report.below_alpha += below ? 1 : 0;
  if (family.sets == 1 || r.ratio < family.min_ratio) {
    family.min_ratio = r.ratio;
    family.min_size = r.set_size;
  }
  if (report.sets == 1 || r.ratio < report.min_ratio) {
    report.min_ratio = r.ratio;
    report.worst_family = family.name;
    report.worst_set.assign(set.begin(), set.end());
  }
}

ProbeReport exhaustive_probe(const TwistedCube& cube, ProbeReport report) {
  const Graph g = to_graph(cube);
  const auto n = g.vertex_count();
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (auto u : g.neighbors(v)) nbr[v] |= std::uint32_t{1} << u;
  }
  report.exhaustive = true;
  report.families.push_back({"exhaustive", 0, 0, 0.0, 0});
  auto& family = report.families.back();
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<std::uint32_t> reach(limit, 0);
  std::uint32_t worst_mask = 0;
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    reach[mask] = reach[mask & (mask - 1)] | nbr[std::countr_zero(mask)];
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > report.max_set_size) continue;
    const auto boundary = static_cast<std::size_t>(std::popcount(reach[mask] & ~mask));
    const double ratio = static_cast<double>(boundary) / static_cast<double>(size);
    ++family.sets;
    ++report.sets;
    if (ratio < report.alpha) {
      ++family.below_alpha;
      ++report.below_alpha;
    }
    if (family.sets == 1 || ratio < family.min_ratio) {
      family.min_ratio = ratio;
      family.min_size = size;
      worst_mask = mask;
    }
  }
  report.min_ratio = family.min_ratio;
  report.worst_family = family.name;
  for (std::uint32_t v = 0; v < n; ++v) {
    if ((worst_mask >> v) & 1U) report.worst_set.emplace_back(v);
  }
  return report;
}

std::vector<Vertex> random_subset(std::size_t population, std::size_t count, KeyedStream& stream,
                                  std::vector<Word>& pool) {
  pool.resize(population);
  std::iota(pool.begin(), pool.end(), Word{0});
  std::vector<Vertex> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(stream.bounded(population - i));
    std::swap(pool[i], pool[j]);
    out.emplace_back(pool[i]);
  }
  return out;
}

std::vector<Vertex> random_ball(const TwistedCube& cube, std::size_t max_size, KeyedStream& stream,
                                std::vector<std::uint8_t>& seen) {
  const Vertex center(static_cast<Word>(stream.bounded(cube.vertex_count())));
  std::vector<Vertex> ball{center};
  std::vector<std::size_t> layer_end{1};
  seen.assign(cube.vertex_count(), 0);
  seen[center.word] = 1;
  std::size_t begin = 0;
  for (;;) {
    const std::size_t end = ball.size();
    std::vector<Vertex> layer;
    for (std::size_t i = begin; i < end; ++i) {
      cube.for_each_neighbor(ball[i], [&](Vertex y, int) {
        if (!seen[y.word]) {
          seen[y.word] = 1;
          layer.push_back(y);
        }
      });
    }
    if (layer.empty() || end + layer.size() > max_size) break;
    ball.insert(ball.end(), layer.begin(), layer.end());
    layer_end.push_back(ball.size());
    begin = end;
  }
  const auto radius = static_cast<std::size_t>(stream.bounded(layer_end.size()));
  ball.resize(layer_end[radius]);
  return ball;
}

std::vector<Vertex> random_instance_union(const TwistedCube& cube, std::size_t max_size, KeyedStream& stream,
                                          std::vector<Word>& pool) {
  const std::size_t h = cube.base_size();
  int max_level = -1;
  while (max_level + 1 < cube.dimension() && (h << (max_level + 1)) <= max_size) ++max_level;
  if (max_level < 0) return random_subset(cube.vertex_count(), 1 + stream.bounded(max_size), stream, pool);
  const int s = static_cast<int>(stream.bounded(static_cast<std::uint64_t>(max_level) + 1));
  const std::size_t classes = std::size_t{1} << (cube.dimension() - s);
  const std::size_t per_class = h << s;
  const std::size_t max_classes = std::min(classes - 1, max_size / per_class);
  const std::size_t count = 1 + static_cast<std::size_t>(stream.bounded(max_classes));
  std::vector<Vertex> out;
  out.reserve(count * per_class);
  for (const auto& cls : random_subset(classes, count, stream, pool)) {
    const Vertex representative(static_cast<Word>((cls.word << s) * h));
    const auto part = cube.instance_set(representative, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Word> suffix_class_check(const TwistedCube& cube, std::span<const Vertex> set, int k,
                                     int expected_side) {
  std::vector<Word> out;
  for (const auto& v : set) {
    if (!cube.contains(v)) throw ValidationError("vertex out of range");
    if (cube.coordinate_of(v, k) != expected_side) {
      throw ValidationError("vertex " + std::to_string(v.word) + " is on the wrong side of generation " +
                            std::to_string(k));
    }
    out.push_back((v.word / cube.base_size()) >> k);
  }
  return out;
}

}  // namespace

ExpansionReport vertex_boundary(const TwistedCube& cube, std::span<const Vertex> set) {
  if (set.empty()) throw ValidationError("boundary of the empty set is not defined");
  if (set.size() >= cube.vertex_count()) throw ValidationError("set must be a proper subset of V");
  BoundaryScratch scratch(cube.vertex_count());
  return boundary_with(cube, set, scratch);
}

ProbeReport expansion_probe(const TwistedCube& cube, double eta, double alpha, std::size_t trials,
                            std::uint64_t seed) {
  check_probe_args(eta, alpha);
  ProbeReport report;
  report.eta = eta;
  report.alpha = alpha;
  report.max_set_size = static_cast<std::size_t>(std::floor(eta * static_cast<double>(cube.vertex_count())));
  if (report.max_set_size == 0) throw ValidationError("eta * |V| < 1 leaves no sets to test");
  if (cube.vertex_count() <= 20) return exhaustive_probe(cube, report);

  report.families = {{"uniform", 0, 0, 0.0, 0}, {"ball", 0, 0, 0.0, 0}, {"instance_union", 0, 0, 0.0, 0}};
  BoundaryScratch scratch(cube.vertex_count());
  std::vector<Word> pool;
  std::vector<std::uint8_t> seen;
  for (std::size_t t = 0; t < trials; ++t) {
    auto stream = task_stream(seed, t);
    const std::size_t family = t % 3;
    std::vector<Vertex> set;
    switch (family) {
      case 0:
        set = random_subset(cube.vertex_count(), 1 + stream.bounded(report.max_set_size), stream, pool);
        break;
      case 1:
        set = random_ball(cube, report.max_set_size, stream, seen);
        break;
      default:
        set = random_instance_union(cube, report.max_set_size, stream, pool);
        break;
    }
    record(report, report.families[family], boundary_with(cube, set, scratch), set);
  }
  return report;
}

double matched_fraction(const TwistedCube& cube, std::span<const Vertex> a, std::span<const Vertex> b,
                        int k) {
  if (k < 1 || k > cube.dimension()) throw ValidationError("generation out of range");
  if (a.empty() && b.empty()) throw ValidationError("A and B are both empty");
  auto classes = suffix_class_check(cube, a, k, 0);
  const auto b_classes = suffix_class_check(cube, b, k, 1);
  classes.insert(classes.end(), b_classes.begin(), b_classes.end());
  if (std::adjacent_find(classes.begin(), classes.end(), std::not_equal_to<>()) != classes.end()) {
    throw ValidationError("A and B must lie in a common instance of generation " + std::to_string(k));
  }
  std::unordered_set<Word> in_b;
  for (const auto& v : b) in_b.insert(v.word);
  std::unordered_set<Word> counted;
  std::size_t matched = 0;
  for (const auto& x : a) {
    if (!counted.insert(x.word).second) continue;
    if (in_b.count(cube.neighbor_unchecked(x, k).word)) ++matched;
  }
  return 2.0 * static_cast<double>(matched) / static_cast<double>(counted.size() + in_b.size());
}

bool badly_matched(const TwistedCube& cube, std::span<const Vertex> a, std::span<const Vertex> b, int k,
                   double alpha) {
  return matched_fraction(cube, a, b, k) >= 1.0 - alpha;
}

std::size_t second_neighborhood(const TwistedCube& cube, Vertex v) {
  if (!cube.contains(v)) throw ValidationError("vertex out of range");
  std::unordered_set<Word> first{v.word};
  cube.for_each_neighbor(v, [&](Vertex y, int) { first.insert(y.word); });
  std::unordered_set<Word> second;
  cube.for_each_neighbor(v, [&](Vertex y, int) {
    cube.for_each_neighbor(y, [&](Vertex z, int) {
      if (!first.count(z.word)) second.insert(z.word);
    });
  });
  return second.size();
}

}  // namespace twistcube
