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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twistcube/topology/twisted_cube.hpp"

namespace twistcube {

// Spec manifest (JSON):
//   { "model": "duplicube" | "independent" | "explicit",
//     "n": int,
//     "seed": uint64,
//     "permutations": [[int, ...], ...],                  optional
//     "base": { "vertex_count": int, "edges": [[u, v]] }  optional }
//
// The writer emits keys in that order with a fixed layout, so
// load -> write reproduces the file byte for byte.
std::string manifest_to_json(const TwistSpec& spec);

// Throws ValidationError on malformed JSON, unknown keys or an invalid spec.
TwistSpec manifest_from_json(std::string_view text);

void save_manifest(const std::filesystem::path& path, const TwistSpec& spec);
TwistSpec load_manifest(const std::filesystem::path& path);

// Permutation file: a JSON array of tables, ordered by level (duplicube
// shape) or by (level, copy suffix) row-major (independent shape).
std::string permutations_to_json(const std::vector<std::vector<std::uint32_t>>& tables);
std::vector<std::vector<std::uint32_t>> permutations_from_json(std::string_view text);

// One "u v" line per edge with u < v, in lexicographic order.
void write_edge_list(std::ostream& out, const TwistedCube& cube);

// Graphviz rendering with edges labelled by generation. Throws GuardError
// above n = 8 unless `force` is set.
void write_dot(std::ostream& out, const TwistedCube& cube, bool force = false);

}  // namespace twistcube
