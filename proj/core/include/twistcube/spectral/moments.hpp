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

#include <boost/multiprecision/cpp_int.hpp>

#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

using BigInt = boost::multiprecision::cpp_int;

// Catalan number C_m, exact for m <= 33.
std::uint64_t catalan(int m);

// k-th moment of the semicircle law on [-2, 2]: C_{k/2} for even k, 0 for odd.
double semicircle_moment(int k);

// The semicircle density with the constant 2 / (4 pi^2) in front of
// sqrt(4 - x^2), zero outside [-2, 2]. This constant integrates to 1/pi.
double semicircle_density(double x);

// The unit-mass semicircle density sqrt(4 - x^2) / (2 pi).
double semicircle_density_normalized(double x);

// Mass of the unit semicircle law on (-inf, x].
double semicircle_cdf(double x);

// Mass of the standard Gaussian on (-inf, x].
double gaussian_cdf(double x);

struct MomentRow {
  int k = 0;
  BigInt closed_walks;  // sum over vertices of closed k-walks
  double m_k = 0.0;     // closed_walks / (|V| n^(k/2))
  double catalan = 0.0; // semicircle moment
  double abs_error = 0.0;  // |m_k - catalan|
};

struct MomentReport {
  int n = 0;
  std::uint64_t seed = 0;
  Model model = Model::kDuplicube;
  std::vector<MomentRow> rows;  // k = 1..k_max

  const MomentRow& at(int k) const { return rows.at(static_cast<std::size_t>(k - 1)); }
};

// Closed k-walks starting at v for k = 0..k_max (entry 0 is 1).
std::vector<std::uint64_t> closed_walks_at(const TwistedCube& cube, Vertex v, int k_max);

// Normalized moments from exact closed-walk counts. Each source contributes
// the inner products of its walk-count vectors up to radius ceil(k_max/2), so
// only a sparse neighborhood of every source is touched. Requires k_max <= 10
// and n <= 20 (the latter unless `force`); `threads` == 0 uses the machine's
// parallelism.
MomentReport walk_moments(const TwistedCube& cube, int k_max, int threads = 0, bool force = false);

// (1 / count) * sum (lambda / sqrt(n))^k.
double moment_from_spectrum(std::span<const double> eigenvalues, int n, int k);

}  // namespace twistcube
