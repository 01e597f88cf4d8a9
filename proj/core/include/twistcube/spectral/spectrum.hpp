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
#include <vector>

#include "twistcube/topology/graph.hpp"
#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

struct SpectrumResult {
  std::vector<double> eigenvalues;  // descending
  int n = 0;
  std::uint64_t seed = 0;
  Model model = Model::kDuplicube;
};

// All adjacency eigenvalues of a small graph, descending. Dense LAPACK solve.
std::vector<double> dense_eigenvalues(const Graph& g);

// Full spectrum of the cube. The dense matrix needs 8 |V|^2 bytes, so this
// refuses more than 2^13 vertices unless `force` is set.
SpectrumResult full_spectrum(const TwistedCube& cube, bool force = false);

struct TopEigenOptions {
  double tolerance = 1e-10;      // residual bound relative to max(1, |lambda|)
  int max_iterations = 3000;     // Lanczos steps per eigenvalue
  std::uint64_t seed = 0x5eed;   // start vectors
};

struct TopEigenResult {
  std::vector<double> values;     // descending, `count` entries
  std::vector<double> residuals;  // ||A v - lambda v|| for each value
  bool converged = false;
  int iterations = 0;             // total Lanczos steps
};

// Leading eigenvalues by matrix-free Lanczos on the implicit neighbor
// operator (count <= 4, |V| <= 2^22 unless `force`).
//
// On base-free cubes the constant vector (eigenvalue n) and g(x) = (-1)^{x_n}
// (eigenvalue n - 2) are exact eigenvectors; both are verified and deflated,
// and the remaining values come from Lanczos on their orthogonal complement
// with locking of each converged Ritz vector. With a base graph nothing is
// deflated.
TopEigenResult top_eigenvalues(const TwistedCube& cube, int count, const TopEigenOptions& options = {},
                               bool force = false);

// y = A x for the cube's adjacency matrix, without materializing it.
void apply_adjacency(const TwistedCube& cube, const std::vector<double>& x, std::vector<double>& y);

}  // namespace twistcube
