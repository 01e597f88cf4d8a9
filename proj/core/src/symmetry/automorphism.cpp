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

#include "twistcube/symmetry/automorphism.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <thread>

#include "twistcube/errors.hpp"

namespace twistcube {

std::string_view to_string(AutKind kind) {
  switch (kind) {
    case AutKind::kSwap:
      return "swap";
    case AutKind::kPreserve:
      return "preserve";
    case AutKind::kOther:
      return "other";
  }
  return "other";
}

AutKind classify(std::span<const std::uint32_t> phi) {
  const std::size_t half = phi.size() / 2;
  bool preserve = true;
  bool swap = phi.size() % 2 == 0;
  for (std::size_t v = 0; v < phi.size(); ++v) {
    const bool top = v >= half;
    const bool image_top = phi[v] >= half;
    if (top != image_top) preserve = false;
    if (top == image_top) swap = false;
  }
  if (preserve) return AutKind::kPreserve;
  if (swap) return AutKind::kSwap;
  return AutKind::kOther;
}

bool is_automorphism(const Graph& g, std::span<const std::uint32_t> phi) {
  const std::uint32_t n = g.vertex_count();
  if (phi.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (auto image : phi) {
    if (image >= n || hit[image]) return false;
    hit[image] = 1;
  }
  // A bijection that maps every edge onto an edge and preserves degrees is
  // edge-preserving in both directions, since the edge counts agree.
  for (std::uint32_t u = 0; u < n; ++u) {
    if (g.degree(u) != g.degree(phi[u])) return false;
    for (auto v : g.neighbors(u)) {
      if (!g.has_edge(phi[u], phi[v])) return false;
    }
  }
  return true;
}

std::size_t AutReport::orbit_count() const {
  std::size_t count = 0;
  for (std::size_t v = 0; v < orbit.size(); ++v) count += orbit[v] == v;
  return count;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller root so that find() returns the orbit minimum.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

  void absorb(const Permutation& phi) {
    for (std::uint32_t v = 0; v < phi.size(); ++v) unite(v, phi[v]);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

using Coloring = std::vector<std::uint32_t>;

std::uint32_t color_count(const Coloring& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.vertex_count()) {
    // Common-neighbor counts to neighbors and to vertices at distance two.
    std::vector<std::uint32_t> common(n_, 0);
    std::vector<std::uint32_t> touched;
    near_.resize(n_);
    far_.resize(n_);
    for (std::uint32_t v = 0; v < n_; ++v) {
      for (auto w : g.neighbors(v)) {
        for (auto u : g.neighbors(w)) {
          if (u == v) continue;
          if (common[u]++ == 0) touched.push_back(u);
        }
      }
      for (auto u : g.neighbors(v)) near_[v].emplace_back(u, common[u]);
      for (auto u : touched) {
        if (!g.has_edge(v, u)) far_[v].emplace_back(u, common[u]);
        common[u] = 0;
      }
      touched.clear();
    }
  }

  AutReport run() {
    AutReport report;
    report.orbit.resize(n_);
    std::iota(report.orbit.begin(), report.orbit.end(), 0U);
    if (n_ == 0) return report;

    // First path down to a discrete coloring.
    std::vector<Node> path;
    Coloring colors = refine(Coloring(n_, 0));
    for (;;) {
      Node node;
      node.colors = colors;
      node.cell_sizes = cell_sizes(colors);
      node.target = target_cell(colors, node.cell_sizes);
      path.push_back(node);
      if (node.target.empty()) break;
      colors = refine(individualize(colors, node.target.front()));
    }
    leaf_.assign(n_, 0);
    for (std::uint32_t v = 0; v < n_; ++v) leaf_[v] = path.back().colors[v];
    path_ = &path;

    std::vector<std::uint64_t> orbit_sizes(path.size(), 1);
    for (std::size_t level = path.size() - 1; level-- > 0;) {
      const auto& cell = path[level].target;
      const std::uint32_t anchor = cell.front();
      UnionFind orbits(n_);
      for (const auto& phi : generators_) orbits.absorb(phi);
      for (std::size_t i = 1; i < cell.size(); ++i) {
        const std::uint32_t w = cell[i];
        if (orbits.find(w) == orbits.find(anchor)) continue;
        auto found = search(individualize(path[level].colors, w), level + 1);
        if (!found) continue;
        if (!is_automorphism(g_, *found)) throw InternalError("automorphism search produced a non-automorphism");
        orbits.absorb(*found);
        generators_.push_back(std::move(*found));
      }
      std::uint64_t size = 0;
      for (auto w : cell) size += orbits.find(w) == orbits.find(anchor);
      orbit_sizes[level] = size;
    }

    for (auto size : orbit_sizes) report.order *= size;
    UnionFind all(n_);
    for (const auto& phi : generators_) {
      all.absorb(phi);
      report.kinds.push_back(classify(phi));
    }
    for (std::uint32_t v = 0; v < n_; ++v) report.orbit[v] = all.find(v);
    report.generators = std::move(generators_);
    return report;
  }

 private:
  struct Node {
    Coloring colors;
    std::vector<std::uint32_t> cell_sizes;
    std::vector<std::uint32_t> target;  // members of the target cell, ascending
  };

  static std::vector<std::uint32_t> cell_sizes(const Coloring& colors) {
    std::vector<std::uint32_t> sizes(color_count(colors), 0);
    for (auto c : colors) ++sizes[c];
    return sizes;
  }

  // Smallest non-singleton cell, lowest color first; empty when discrete.
  std::vector<std::uint32_t> target_cell(const Coloring& colors, const std::vector<std::uint32_t>& sizes) const {
    std::uint32_t best = 0;
    std::uint32_t best_size = 0;
    for (std::uint32_t c = 0; c < sizes.size(); ++c) {
      if (sizes[c] > 1 && (best_size == 0 || sizes[c] < best_size)) {
        best = c;
        best_size = sizes[c];
      }
    }
    std::vector<std::uint32_t> cell;
    if (best_size == 0) return cell;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (colors[v] == best) cell.push_back(v);
    }
    return cell;
  }

  // Gives w its own color just below the rest of its cell.
  Coloring individualize(const Coloring& colors, std::uint32_t w) const {
    Coloring out(n_);
    for (std::uint32_t v = 0; v < n_; ++v) out[v] = 2 * colors[v] + (v == w ? 0 : 1);
    return compress(out);
  }

  Coloring compress(const Coloring& colors) const {
    std::vector<std::uint32_t> values(colors);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Coloring out(n_);
    for (std::uint32_t v = 0; v < n_; ++v) {
      out[v] = static_cast<std::uint32_t>(std::lower_bound(values.begin(), values.end(), colors[v]) - values.begin());
    }
    return out;
  }

  // Iterates to a fixed point. New colors are ranks of signatures that start
  // with the old color, so the result never merges cells and depends only on
  // the colored graph, not on vertex labels.
  Coloring refine(Coloring colors) const {
    std::uint32_t cells = color_count(colors);
    std::vector<std::vector<std::uint64_t>> sig(n_);
    std::vector<std::uint32_t> order(n_);
    while (cells < n_) {
      for (std::uint32_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        const std::size_t near_begin = s.size();
        for (const auto& [u, c] : near_[v]) s.push_back((std::uint64_t{colors[u]} << 32) | c);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(near_begin), s.end());
        s.push_back(~std::uint64_t{0});
        const std::size_t far_begin = s.size();
        for (const auto& [u, c] : far_[v]) s.push_back((std::uint64_t{colors[u]} << 32) | c);
        std::sort(s.begin() + static_cast<std::ptrdiff_t>(far_begin), s.end());
      }
      std::iota(order.begin(), order.end(), 0U);
      std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
      Coloring next(n_);
      std::uint32_t rank = 0;
      for (std::uint32_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      const std::uint32_t next_cells = rank + 1;
      colors.swap(next);
      if (next_cells == cells) break;
      cells = next_cells;
    }
    return colors;
  }

  // Looks below a node at `depth` for a leaf equivalent to the first leaf.
  std::optional<Permutation> search(const Coloring& unrefined, std::size_t depth) const {
    const Coloring colors = refine(unrefined);
    const auto sizes = cell_sizes(colors);
    const auto& expected = (*path_)[depth];
    if (sizes != expected.cell_sizes) return std::nullopt;
    const auto cell = target_cell(colors, sizes);
    if (cell.empty()) {
      std::vector<std::uint32_t> by_color(n_);
      for (std::uint32_t v = 0; v < n_; ++v) by_color[colors[v]] = v;
      Permutation phi(n_);
      for (std::uint32_t v = 0; v < n_; ++v) phi[v] = by_color[leaf_[v]];
      if (is_automorphism(g_, phi)) return phi;
      return std::nullopt;
    }
    for (auto w : cell) {
      if (auto found = search(individualize(colors, w), depth + 1)) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::uint32_t n_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> near_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> far_;
  Coloring leaf_;
  const std::vector<Node>* path_ = nullptr;
  std::vector<Permutation> generators_;
};

}  // namespace

AutReport automorphisms(const Graph& g, bool force) {
  if (g.vertex_count() > 1024 && !force) throw GuardError("automorphism search is limited to 1024 vertices");
  return Searcher(g).run();
}

AutReport automorphisms(const TwistedCube& cube, bool force) {
  if (cube.vertex_count() > 1024 && !force) throw GuardError("automorphism search is limited to 1024 vertices");
  return automorphisms(to_graph(cube, force), force);
}

AutReport brute_force_automorphisms(const Graph& g, bool force) {
  const std::uint32_t n = g.vertex_count();
  if (n > 16 && !force) throw GuardError("brute-force automorphisms are limited to 16 vertices");
  AutReport report;
  report.order = 0;
  Permutation phi(n);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, std::uint32_t v) -> void {
    if (v == n) {
      report.order += 1;
      bool identity = true;
      for (std::uint32_t u = 0; u < n; ++u) identity = identity && phi[u] == u;
      if (!identity) {
        report.generators.push_back(phi);
        report.kinds.push_back(classify(phi));
      }
      return;
    }
    for (std::uint32_t image = 0; image < n; ++image) {
      if (used[image] || g.degree(image) != g.degree(v)) continue;
      bool consistent = true;
      for (std::uint32_t u = 0; u < v && consistent; ++u) {
        consistent = g.has_edge(u, v) == g.has_edge(phi[u], image);
      }
      if (!consistent) continue;
      phi[v] = image;
      used[image] = 1;
      self(self, v + 1);
      used[image] = 0;
    }
  };
  extend(extend, 0);
  UnionFind all(n);
  for (const auto& p : report.generators) all.absorb(p);
  report.orbit.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) report.orbit[v] = all.find(v);
  return report;
}

AsymmetryReport asymmetry_experiment(const TwistSpec& spec, std::span<const std::uint64_t> seeds, int threads,
                                     bool force) {
  AsymmetryReport report;
  report.model = spec.model;
  report.n = spec.n;
  report.rows.resize(seeds.size());
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, seeds.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < seeds.size(); i = next.fetch_add(1)) {
      TwistSpec s = spec;
      s.seed = seeds[i];
      const auto cube = build_cube(s);
      const auto aut = automorphisms(cube, force);
      AsymmetryRow row;
      row.seed = seeds[i];
      row.order = aut.order_string();
      row.generators = aut.generators.size();
      for (auto kind : aut.kinds) {
        row.swap += kind == AutKind::kSwap;
        row.preserve += kind == AutKind::kPreserve;
        row.other += kind == AutKind::kOther;
      }
      row.vertex_transitive = aut.orbit_count() == 1;
      report.rows[i] = std::move(row);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  for (const auto& row : report.rows) report.trivial += row.order == "1";
  report.fraction_trivial = seeds.empty() ? 0.0 : static_cast<double>(report.trivial) / static_cast<double>(seeds.size());
  return report;
}

}  // namespace twistcube
