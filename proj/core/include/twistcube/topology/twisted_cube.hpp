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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistcube/topology/base_graph.hpp"
#include "twistcube/topology/permutation.hpp"
#include "twistcube/topology/vertex.hpp"

namespace twistcube {

enum class Model {
  kDuplicube,    // one permutation per generation, shared by every copy
  kIndependent,  // one permutation per (generation, copy suffix)
  kExplicit,     // caller-supplied tables
};

std::string_view to_string(Model model);
// Throws ValidationError on an unknown name.
Model parse_model(std::string_view name);

// Declarative recipe for a twisted hypercube.
//
// Explicit permutations are indexed by level L, the permutation applied when
// twisting two copies of G_L into G_{L+1}; level L acts on base_size * 2^L
// points. Without a base graph level 0 acts on a single point and is omitted,
// so `permutations` holds either
//   * one table per level (duplicube-shaped), or
//   * one table per (level, copy suffix), level-major then suffix ascending,
//     with 2^(n-L-1) suffixes at level L (independent-shaped).
struct TwistSpec {
  Model model = Model::kDuplicube;
  int n = 1;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::uint32_t>> permutations;
  std::optional<BaseGraph> base;

  friend bool operator==(const TwistSpec&, const TwistSpec&) = default;
};

// Throws ValidationError describing the first problem found.
void validate(const TwistSpec& spec);

// Joins g0 on [0, m) and g1 on [m, 2m) by the matching x <-> m + sigma(x).
// Throws DimensionError unless |g0| == |g1| == |sigma|.
AdjacencyList sigma_twist(const AdjacencyList& g0, const AdjacencyList& g1,
                          const PermutationTable& sigma);

// The resolved graph. Vertex words encode (base index, x_1, ..., x_n) as
// base + base_size * (x_1 + 2 x_2 + ... + 2^(n-1) x_n); without a base graph
// the word is simply the bit vector.
//
// Immutable after construction. Independent cubes resolve their permutation
// tables lazily; the fill is idempotent and thread-safe, so every query is
// safe to call concurrently.
class TwistedCube {
 public:
  TwistedCube(TwistedCube&&) noexcept;
  TwistedCube& operator=(TwistedCube&&) noexcept;
  ~TwistedCube();

  int dimension() const { return n_; }
  const TwistSpec& spec() const { return spec_; }
  Model model() const { return spec_.model; }
  bool has_base() const { return base_size_ != 1; }
  std::uint32_t base_size() const { return base_size_; }
  std::size_t vertex_count() const { return vertex_count_; }

  // Whether permutations differ between copies of the same level.
  bool per_copy() const { return per_copy_; }

  // N_k(x) for 1 <= k <= n. Throws ValidationError on bad k or x.
  Vertex neighbor(Vertex x, int k) const;

  // Same, without range checks.
  Vertex neighbor_unchecked(Vertex x, int k) const;

  // Twist neighbors by generation 1..n, then base neighbors.
  std::vector<Vertex> neighbors(Vertex x) const;

  // Calls f(neighbor, generation) for every neighbor; base edges report
  // generation 0.
  template <class F>
  void for_each_neighbor(Vertex x, F&& f) const {
    for (int k = 1; k <= n_; ++k) f(neighbor_unchecked(x, k), k);
    if (has_base()) {
      const Word b = x.word % base_size_;
      const Word copy = x.word - b;
      for (auto nb : spec_.base->adjacency[b]) f(Vertex(copy + nb), 0);
    }
  }

  int degree(Vertex x) const;

  // Largest twist coordinate at which x and y differ; 0 when they differ only
  // in the base index. Throws DomainError when x == y.
  int generation(Vertex x, Vertex y) const;

  // Value of twist coordinate k (1-based) of x.
  int coordinate_of(Vertex x, int k) const;

  // Vertices sharing x's coordinates s+1..n (with every base index).
  std::vector<Vertex> instance_set(Vertex x, int s) const;

  // BFS ball of radius r, sorted by word.
  std::vector<Vertex> ball(Vertex v, int r) const;

  // Ball using only edges of generation < k, sorted by word.
  std::vector<Vertex> restricted_ball(Vertex v, int r, int k) const;

  // The permutation used at `level` by the copy whose twist coordinates above
  // level+1 equal `suffix`. For shared-table models the suffix is ignored.
  const PermutationTable& table(int level, std::uint64_t suffix = 0) const;

  // Number of distinct tables stored for `level`.
  std::uint64_t tables_at(int level) const;

  bool contains(Vertex x) const { return x.word < vertex_count_; }

 private:
  friend TwistedCube build_cube(const TwistSpec& spec);

  struct Level {
    std::vector<std::unique_ptr<PermutationTable>> slots;
    std::unique_ptr<std::once_flag[]> once;
  };

  explicit TwistedCube(TwistSpec spec);

  const PermutationTable& resolve(int level, std::uint64_t suffix) const;
  void check_vertex(Vertex x) const;

  TwistSpec spec_;
  int n_ = 0;
  std::uint32_t base_size_ = 1;
  std::size_t vertex_count_ = 0;
  bool per_copy_ = false;
  mutable std::vector<Level> levels_;
  PermutationTable trivial_;
};

// Resolves a spec into a graph. Deterministic: the same spec always yields the
// same graph. Throws ValidationError on an invalid spec.
TwistedCube build_cube(const TwistSpec& spec);

// Convenience constructors.
TwistSpec hypercube_spec(int n);
TwistSpec duplicube_spec(int n, std::uint64_t seed);
TwistSpec independent_spec(int n, std::uint64_t seed);

inline Vertex neighbor_k(const TwistedCube& cube, Vertex x, int k) { return cube.neighbor(x, k); }
inline std::vector<Vertex> neighbors(const TwistedCube& cube, Vertex x) {
  return cube.neighbors(x);
}
inline std::vector<Vertex> ball(const TwistedCube& cube, Vertex v, int r) {
  return cube.ball(v, r);
}
inline std::vector<Vertex> restricted_ball(const TwistedCube& cube, Vertex v, int r, int k) {
  return cube.restricted_ball(v, r, k);
}

}  // namespace twistcube
