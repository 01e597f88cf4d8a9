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

#include <span>
#include <vector>

namespace twistcube {

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  double mass = 0.0;                // fraction of eigenvalues in the bin
  double semicircle_ref = 0.0;      // unit semicircle mass over the bin
  double gaussian_ref = 0.0;        // standard Gaussian mass over the bin
  double semicircle_printed = 0.0;  // integral of semicircle_density over the bin
};

struct Histogram {
  std::vector<HistogramBin> bins;
  double l1_semicircle = 0.0;  // sum |mass - semicircle_ref|
  double l1_gaussian = 0.0;    // sum |mass - gaussian_ref|
};

// Histogram of lambda / sqrt(n) over `bins` equal bins on [-half_width,
// half_width]. half_width <= 0 selects sqrt(n), which holds every eigenvalue
// of an n-regular graph. bins <= 0 selects n + 1, which puts each of the
// n + 1 distinct eigenvalues n - 2d of Q_n in its own bin. Bins are half-open
// [left, right) except the last; values outside the range land in the
// nearest end bin, so the masses sum to 1.
Histogram empirical_histogram(std::span<const double> eigenvalues, int n, int bins = 0,
                              double half_width = 0.0);

}  // namespace twistcube
