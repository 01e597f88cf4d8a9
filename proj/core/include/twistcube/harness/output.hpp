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
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "twistcube/metrics/matching_cut.hpp"
#include "twistcube/metrics/routing.hpp"
#include "twistcube/spectral/histogram.hpp"
#include "twistcube/spectral/moments.hpp"
#include "twistcube/symmetry/automorphism.hpp"
#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

// Shortest decimal text that reads back to the same double ("1" for 1.0).
std::string format_double(double value);

// index,eigenvalue
void write_spectrum_csv(std::ostream& out, std::span<const double> eigenvalues);

// k,m_k,catalan,abs_error
void write_moment_csv(std::ostream& out, const MomentReport& report);

// bin_left,bin_right,mass,semicircle_ref,gaussian_ref
void write_histogram_csv(std::ostream& out, const Histogram& histogram);

// One scalar observation tagged with the cube it came from.
struct MetricRow {
  Model model = Model::kDuplicube;
  int n = 0;
  std::uint64_t seed = 0;
  std::string metric;
  std::string value;

  friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

// model,n,seed,metric,value
void write_metric_csv(std::ostream& out, std::span<const MetricRow> rows);

// JSON documents, pretty-printed with a trailing newline.
std::string spectrum_to_json(std::span<const double> eigenvalues, int n, std::uint64_t seed, Model model);
std::string moments_to_json(const MomentReport& report);
std::string histogram_to_json(const Histogram& histogram);
std::string route_to_json(const RouteTrace& trace, int n);
std::string aut_report_to_json(const AutReport& report);
std::string matching_cuts_to_json(std::span<const MatchingCut> cuts, std::uint32_t vertex_count);

}  // namespace twistcube
