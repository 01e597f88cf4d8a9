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

#include "twistcube/topology/base_graph.hpp"

#include <algorithm>
#include <string>

#include "twistcube/errors.hpp"

namespace twistcube {

BaseGraph BaseGraph::from_edges(std::uint32_t vertex_count,
                                const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  if (vertex_count == 0) throw ValidationError("base graph needs at least one vertex");
  BaseGraph g;
  g.vertex_count = vertex_count;
  g.adjacency.assign(vertex_count, {});
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw ValidationError("base edge endpoint out of range");
    }
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
  g.validate();
  return g;
}

void BaseGraph::validate() const {
  if (vertex_count == 0 || adjacency.size() != vertex_count) {
    throw ValidationError("base graph adjacency size does not match vertex_count");
  }
  for (std::uint32_t u = 0; u < vertex_count; ++u) {
    const auto& list = adjacency[u];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto v = list[i];
      if (v >= vertex_count) throw ValidationError("base neighbor out of range");
      if (v == u) throw ValidationError("base graph has a self-loop at " + std::to_string(u));
      if (std::count(list.begin(), list.end(), v) != 1) {
        throw ValidationError("base graph repeats edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "}");
      }
      const auto& back = adjacency[v];
      if (std::find(back.begin(), back.end(), u) == back.end()) {
        throw ValidationError("base graph is not symmetric");
      }
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> BaseGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < vertex_count; ++u) {
    for (auto v : adjacency[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twistcube
