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

#include "twistcube/metrics/partial_order.hpp"

#include <functional>
#include <queue>
#include <string>

#include "twistcube/errors.hpp"

namespace twistcube {

PartialOrder partial_order_build(const TwistedCube& cube, bool force) {
  constexpr std::size_t kLimit = std::size_t{1} << 16;
  if (cube.vertex_count() > kLimit && !force) {
    throw GuardError("partial order is limited to 2^16 vertices");
  }
  const auto n = static_cast<std::uint32_t>(cube.vertex_count());
  PartialOrder order;
  order.successors_.resize(n);
  order.indegree_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (int k = 1; k <= cube.dimension(); ++k) {
      if (cube.coordinate_of(Vertex(x), k) != 0) continue;
      const auto y = cube.neighbor_unchecked(Vertex(x), k).word;
      order.successors_[x].push_back(y);
      ++order.indegree_[y];
    }
  }
  std::vector<std::uint32_t> remaining = order.indegree_;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (remaining[v] == 0) ready.push(v);
  }
  order.topo_.reserve(n);
  while (!ready.empty()) {
    const auto v = ready.top();
    ready.pop();
    order.topo_.push_back(v);
    for (auto w : order.successors_[v]) {
      if (--remaining[w] == 0) ready.push(w);
    }
  }
  if (order.topo_.size() != n) {
    throw InternalError("generating relation of the partial order has a cycle");
  }
  return order;
}

bool PartialOrder::less_equal(std::uint32_t x, std::uint32_t y) const {
  if (x >= vertex_count() || y >= vertex_count()) throw ValidationError("vertex out of range");
  if (x == y) return true;
  if (x > y) return false;
  std::vector<std::uint32_t> stack{x};
  std::vector<char> seen(y - x + 1, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : successors_[v]) {
      if (w == y) return true;
      if (w > y || seen[w - x]) continue;
      seen[w - x] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

std::vector<std::vector<std::uint64_t>> PartialOrder::transitive_closure() const {
  const auto n = vertex_count();
  if (n > (1U << 12)) throw GuardError("transitive closure is limited to 2^12 vertices");
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> up(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    const auto v = *it;
    up[v][v / 64] |= std::uint64_t{1} << (v % 64);
    for (auto w : successors_[v]) {
      for (std::size_t i = 0; i < words; ++i) up[v][i] |= up[w][i];
    }
  }
  return up;
}

std::vector<std::uint32_t> PartialOrder::minimal_elements() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < vertex_count(); ++v) {
    if (indegree_[v] == 0) out.push_back(v);
  }
  return out;
}

std::vector<std::uint32_t> PartialOrder::maximal_elements() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < vertex_count(); ++v) {
    if (successors_[v].empty()) out.push_back(v);
  }
  return out;
}

}  // namespace twistcube
