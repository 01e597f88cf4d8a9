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
#include <vector>

#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

// Outer vertex boundary of a set, split by generation.
struct ExpansionReport {
  std::size_t set_size = 0;
  std::size_t boundary_size = 0;  // |dS|
  double ratio = 0.0;             // |dS| / |S|
  // by_generation[k] = |d_k S|, the boundary reached through edges of
  // generation <= k, for k = 0..n. Entry 0 counts base-graph edges only.
  std::vector<std::size_t> by_generation;
};

// Throws ValidationError when S is empty, covers every vertex, repeats a
// vertex or holds an out-of-range vertex.
ExpansionReport vertex_boundary(const TwistedCube& cube, std::span<const Vertex> set);

struct ProbeFamily {
  std::string name;
  std::size_t sets = 0;
  std::size_t below_alpha = 0;
  double min_ratio = 0.0;
  std::size_t min_size = 0;
};

struct ProbeReport {
  double eta = 0.0;
  double alpha = 0.0;
  std::size_t max_set_size = 0;  // floor(eta * |V|)
  bool exhaustive = false;
  std::size_t sets = 0;
  std::size_t below_alpha = 0;    // sets with |dS| < alpha |S|
  double min_ratio = 0.0;
  std::string worst_family;
  std::vector<Vertex> worst_set;
  std::vector<ProbeFamily> families;
};

// Looks for sets of size <= eta |V| with poor expansion. Graphs with at most
// 20 vertices are enumerated exhaustively; larger ones are sampled from three
// families, `trials` sets in total: uniform random sets, BFS balls and unions
// of instance sets I_s. Every trial draws from its own stream keyed by
// (seed, trial). Reports observations only; nothing is certified.
ProbeReport expansion_probe(const TwistedCube& cube, double eta, double alpha, std::size_t trials,
                            std::uint64_t seed);

// 2 |{x in A : N_k(x) in B}| / (|A| + |B|). A must lie on the 0-side and B on
// the 1-side of generation k inside one instance I_k; throws ValidationError
// otherwise.
double matched_fraction(const TwistedCube& cube, std::span<const Vertex> a, std::span<const Vertex> b,
                        int k);

// matched_fraction(...) >= 1 - alpha.
bool badly_matched(const TwistedCube& cube, std::span<const Vertex> a, std::span<const Vertex> b, int k,
                   double alpha);

// |{u : d(v, u) = 2}|.
std::size_t second_neighborhood(const TwistedCube& cube, Vertex v);

}  // namespace twistcube
