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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twistcube/topology/graph.hpp"
#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

using Permutation = std::vector<std::uint32_t>;

// How a vertex permutation treats the top cut {v < |V|/2} | {v >= |V|/2},
// which on a cube is the generation-n cut x_n = 0 | x_n = 1.
enum class AutKind {
  kSwap,      // exchanges the two halves
  kPreserve,  // maps each half onto itself
  kOther,
};

std::string_view to_string(AutKind kind);

AutKind classify(std::span<const std::uint32_t> phi);

// {x, y} is an edge iff {phi(x), phi(y)} is. Also checks phi is a bijection.
bool is_automorphism(const Graph& g, std::span<const std::uint32_t> phi);

struct AutReport {
  std::vector<Permutation> generators;  // images phi[v]
  std::vector<AutKind> kinds;           // one per generator
  boost::multiprecision::cpp_int order = 1;
  // orbit[v] = smallest vertex in the orbit of v under the whole group.
  std::vector<std::uint32_t> orbit;

  std::string order_string() const { return order.str(); }
  bool trivial() const { return order == 1; }
  std::size_t orbit_count() const;
};

// Automorphism group by individualization-refinement. Colors are refined by
// neighbor colors and by distance-2 colors weighted with common-neighbor
// counts; the target cell is the smallest non-singleton cell. The order is the
// product of the orbit lengths along the first path, each orbit being built
// from the generators found below it. Refuses more than 1024 vertices unless
// `force` is set. Throws InternalError if a generator fails verification.
AutReport automorphisms(const Graph& g, bool force = false);
AutReport automorphisms(const TwistedCube& cube, bool force = false);

// Every automorphism by backtracking over partial bijections (at most 16
// vertices unless `force`). The generators are all non-identity elements.
AutReport brute_force_automorphisms(const Graph& g, bool force = false);

struct AsymmetryRow {
  std::uint64_t seed = 0;
  std::string order;  // decimal
  std::size_t generators = 0;
  std::size_t swap = 0;
  std::size_t preserve = 0;
  std::size_t other = 0;
  bool vertex_transitive = false;
};

struct AsymmetryReport {
  Model model = Model::kDuplicube;
  int n = 0;
  std::vector<AsymmetryRow> rows;  // in seed order
  std::size_t trivial = 0;
  double fraction_trivial = 0.0;
};

// Builds `spec` once per seed (overriding spec.seed) and computes the group.
// Seeds run in parallel over `threads` workers (0: machine parallelism); the
// report does not depend on the thread count.
AsymmetryReport asymmetry_experiment(const TwistSpec& spec, std::span<const std::uint64_t> seeds,
                                     int threads = 0, bool force = false);

}  // namespace twistcube
