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

// Reference implementations used as test oracles. Each one recomputes a
// quantity from first principles, independently of the library code path it
// checks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twistcube/topology/graph.hpp"

namespace twistcube::oracle {

using EdgeSet = std::set<std::pair<std::uint32_t, std::uint32_t>>;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Q_n from its textbook definition: x ~ y iff they differ in one bit.
inline EdgeSet hypercube_edges(int n) {
  EdgeSet edges;
  const std::uint32_t count = 1U << n;
  for (std::uint32_t x = 0; x < count; ++x) {
    for (int b = 0; b < n; ++b) {
      const std::uint32_t y = x ^ (1U << b);
      if (x < y) edges.emplace(x, y);
    }
  }
  return edges;
}

inline EdgeSet edge_set(const Graph& g) {
  EdgeSet edges;
  for (const auto& e : g.edges()) edges.insert(e);
  return edges;
}

// Distinct Q_n eigenvalues n - 2d with multiplicity C(n, d).
inline std::map<int, std::uint64_t> hypercube_spectrum(int n) {
  std::map<int, std::uint64_t> spectrum;
  for (int d = 0; d <= n; ++d) spectrum[n - 2 * d] = binomial(n, d);
  return spectrum;
}

// E[(B / sqrt(n))^k] for B a sum of n independent uniform signs.
inline double binomial_moment(int n, int k) {
  long double sum = 0.0L;
  for (int d = 0; d <= n; ++d) sum += static_cast<long double>(binomial(n, d)) * std::pow(static_cast<long double>(n - 2 * d), k);
  return static_cast<double>(sum / std::pow(2.0L, n) / std::pow(static_cast<long double>(n), k / 2.0L));
}

// C(2m, m) / (m + 1).
inline std::uint64_t catalan(int m) { return binomial(2 * m, m) / static_cast<std::uint64_t>(m + 1); }

// trace(A^k) for k = 0..k_max by repeated dense integer products.
inline std::vector<boost::multiprecision::cpp_int> closed_walk_traces(const Graph& g, int k_max) {
  using boost::multiprecision::cpp_int;
  const std::uint32_t n = g.vertex_count();
  std::vector<std::vector<std::uint64_t>> power(n, std::vector<std::uint64_t>(n, 0));
  for (std::uint32_t i = 0; i < n; ++i) power[i][i] = 1;
  std::vector<cpp_int> traces;
  for (int k = 0; k <= k_max; ++k) {
    cpp_int t = 0;
    for (std::uint32_t i = 0; i < n; ++i) t += power[i][i];
    traces.push_back(t);
    std::vector<std::vector<std::uint64_t>> next(n, std::vector<std::uint64_t>(n, 0));
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (power[i][j] == 0) continue;
        for (auto l : g.neighbors(j)) next[i][l] += power[i][j];
      }
    }
    power.swap(next);
  }
  return traces;
}

// Every simple cycle of length 3..k, each listed once as its vertex sequence
// starting at its smallest vertex, with the second vertex smaller than the
// last to fix the direction.
inline std::vector<std::vector<std::uint32_t>> all_simple_cycles(const Graph& g, int k) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<std::uint32_t> path;
  std::vector<char> used(g.vertex_count(), 0);
  auto extend = [&](auto&& self, std::uint32_t start) -> void {
    const std::uint32_t last = path.back();
    for (auto next : g.neighbors(last)) {
      if (next == start && path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
      if (next <= start || used[next] || static_cast<int>(path.size()) >= k) continue;
      used[next] = 1;
      path.push_back(next);
      self(self, start);
      path.pop_back();
      used[next] = 0;
    }
  };
  for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
    path.assign(1, s);
    used[s] = 1;
    extend(extend, s);
    used[s] = 0;
  }
  return cycles;
}

// Order of the group generated by `generators` on [0, degree), by a plain
// Schreier-Sims stabilizer chain.
class SchreierSims {
 public:
  using Perm = std::vector<std::uint32_t>;

  explicit SchreierSims(std::uint32_t degree) : degree_(degree) {}

  void add(const Perm& g) {
    auto [residue, level] = sift(g, 0);
    if (is_identity(residue)) return;
    place(residue, level);
    while (schreier_pass()) {
    }
  }

  boost::multiprecision::cpp_int order() const {
    boost::multiprecision::cpp_int order = 1;
    for (const auto& level : levels_) order *= level.orbit.size();
    return order;
  }

 private:
  struct Level {
    std::uint32_t base = 0;
    std::vector<Perm> generators;  // strong generators fixing earlier base points
    std::vector<std::uint32_t> orbit;
    std::map<std::uint32_t, Perm> transversal;  // u with u(base) = point
  };

  bool is_identity(const Perm& p) const {
    for (std::uint32_t i = 0; i < degree_; ++i) {
      if (p[i] != i) return false;
    }
    return true;
  }

  // (a * b)(x) = a(b(x))
  Perm compose(const Perm& a, const Perm& b) const {
    Perm c(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) c[i] = a[b[i]];
    return c;
  }

  Perm invert(const Perm& a) const {
    Perm c(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) c[a[i]] = i;
    return c;
  }

  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const auto it = levels_[i].transversal.find(g[levels_[i].base]);
      if (it == levels_[i].transversal.end()) return {g, i};
      g = compose(invert(it->second), g);
    }
    return {g, levels_.size()};
  }

  void rebuild_orbit(std::size_t i) {
    auto& level = levels_[i];
    Perm id(degree_);
    for (std::uint32_t x = 0; x < degree_; ++x) id[x] = x;
    level.transversal.clear();
    level.transversal[level.base] = id;
    level.orbit.assign(1, level.base);
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
      const std::uint32_t x = level.orbit[head];
      for (std::size_t j = i; j < levels_.size(); ++j) {
        for (const auto& s : levels_[j].generators) {
          const std::uint32_t y = s[x];
          if (level.transversal.contains(y)) continue;
          level.transversal[y] = compose(s, level.transversal[x]);
          level.orbit.push_back(y);
        }
      }
    }
  }

  void place(const Perm& g, std::size_t level_index) {
    if (level_index == levels_.size()) {
      Level level;
      while (g[level.base] == level.base) ++level.base;
      levels_.push_back(level);
    }
    levels_[level_index].generators.push_back(g);
  }

  // Rebuilds every orbit and sifts every Schreier generator. Returns true if
  // a new strong generator had to be added.
  bool schreier_pass() {
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);
    for (std::size_t i = levels_.size(); i-- > 0;) {
      const auto& level = levels_[i];
      for (const std::uint32_t x : level.orbit) {
        for (std::size_t j = i; j < levels_.size(); ++j) {
          for (const auto& s : levels_[j].generators) {
            const Perm schreier = compose(invert(level.transversal.at(s[x])), compose(s, level.transversal.at(x)));
            auto [residue, where] = sift(schreier, i + 1);
            if (!is_identity(residue)) {
              place(residue, where);
              return true;
            }
          }
        }
      }
    }
    return false;
  }

  std::uint32_t degree_;
  std::vector<Level> levels_;
};

}  // namespace twistcube::oracle
