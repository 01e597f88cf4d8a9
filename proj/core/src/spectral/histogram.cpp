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

#include "twistcube/spectral/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "twistcube/errors.hpp"
#include "twistcube/spectral/moments.hpp"

namespace twistcube {

Histogram empirical_histogram(std::span<const double> eigenvalues, int n, int bins, double half_width) {
  if (eigenvalues.empty()) throw ValidationError("empty spectrum");
  if (n < 1) throw DomainError("dimension must be positive");
  if (bins <= 0) bins = n + 1;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const double r = half_width > 0.0 ? half_width : std::sqrt(static_cast<double>(n));
  const double width = 2.0 * r / bins;

  Histogram h;
  h.bins.resize(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    auto& bin = h.bins[static_cast<std::size_t>(b)];
    bin.left = -r + b * width;
    bin.right = b + 1 == bins ? r : -r + (b + 1) * width;
    bin.semicircle_ref = semicircle_cdf(bin.right) - semicircle_cdf(bin.left);
    bin.gaussian_ref = gaussian_cdf(bin.right) - gaussian_cdf(bin.left);
    bin.semicircle_printed = bin.semicircle_ref / std::numbers::pi;
  }
  for (double lambda : eigenvalues) {
    const double x = lambda * scale;
    const int b = std::clamp(static_cast<int>(std::floor((x + r) / width)), 0, bins - 1);
    h.bins[static_cast<std::size_t>(b)].mass += 1.0;
  }
  const double total = static_cast<double>(eigenvalues.size());
  for (auto& bin : h.bins) {
    bin.mass /= total;
    h.l1_semicircle += std::abs(bin.mass - bin.semicircle_ref);
    h.l1_gaussian += std::abs(bin.mass - bin.gaussian_ref);
  }
  return h;
}

}  // namespace twistcube
