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
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twistcube/harness/output.hpp"
#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

// One analysis applied to every seed of a plan. Recognized names and their
// numeric parameters (defaults in brackets):
//   info                          vertices, edges, degree range
//   diameter       force[0]       exact diameter and both bounds
//   diameter_bounds samples[8]    sampled eccentricity bounds
//   route          pairs[1000]    greedy routing over random pairs
//   spectrum                      dense spectrum file, extreme eigenvalues
//   histogram      bins[n+1]      histogram file, L1 distances to references
//   top_eigen      count[2]       leading eigenvalues, matrix-free
//   moments        kmax[6]        walk-count moments file
//   cycles         k[4]           min / max theta(v, k) over all v
//   second_neighborhood           min / max |{u : d(v,u) = 2}|
//   expansion      eta[0.25] alpha[1] trials[200]
//   automorphisms                 group order, generator kinds
//   matchcut                      matching cuts (small cubes)
//   order                         minimal / maximal element counts
//   mixing         t_max[64] threshold[0.25]
//   cut                           crossing edges of the generation-n cut
struct Operation {
  std::string name;
  std::map<std::string, double> params;

  double param(std::string_view key, double fallback) const;
  friend bool operator==(const Operation&, const Operation&) = default;
};

struct ExperimentPlan {
  TwistSpec spec;  // seed is replaced by each entry of `seeds`
  std::vector<std::uint64_t> seeds;
  std::vector<Operation> operations;
  std::filesystem::path output_dir = "results";
  int threads = 0;  // 0: machine parallelism
};

// Plan file:
//   { "spec": <manifest object>, "seeds": [..], "operations":
//     [{"op": name, "params": {..}}], "output_dir": "..", "threads": int }
// Throws ValidationError on malformed input, unknown keys, unknown
// operations or unknown parameters.
ExperimentPlan plan_from_json(std::string_view text);
ExperimentPlan load_plan(const std::filesystem::path& path);

struct PlanOutcome {
  std::vector<MetricRow> rows;                // seed-major, then operation order
  std::vector<std::filesystem::path> files;   // every file written, sorted
};

// Runs every (seed, operation) task and writes output_dir/results.csv plus
// one file per spectrum, histogram and moment table. Tasks run in parallel;
// rows are merged in canonical order and all task randomness is keyed by
// (seed, operation index), so the files are identical at any thread count.
PlanOutcome run_plan(const ExperimentPlan& plan);

// Metrics of a single operation on one cube, with any side files written to
// `dir`; used by run_plan and by the command-line tool.
std::vector<MetricRow> run_operation(const TwistedCube& cube, const Operation& op, std::size_t op_index,
                                     const std::filesystem::path& dir, std::vector<std::filesystem::path>& files);

}  // namespace twistcube
