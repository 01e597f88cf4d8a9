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

#include "twistcube/topology/twisted_cube.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>

#include "twistcube/errors.hpp"

namespace twistcube {

std::string_view to_string(Model model) {
  switch (model) {
    case Model::kDuplicube:
      return "duplicube";
    case Model::kIndependent:
      return "independent";
    case Model::kExplicit:
      return "explicit";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  if (name == "duplicube") return Model::kDuplicube;
  if (name == "independent") return Model::kIndependent;
  if (name == "explicit") return Model::kExplicit;
  throw ValidationError("unknown model '" + std::string(name) + "'");
}

namespace {

std::uint32_t base_size_of(const TwistSpec& spec) {
  return spec.base ? spec.base->vertex_count : 1U;
}

// First level that carries a non-trivial table.
int first_level(const TwistSpec& spec) { return base_size_of(spec) == 1 ? 1 : 0; }

std::uint64_t per_generation_count(const TwistSpec& spec) {
  return static_cast<std::uint64_t>(spec.n - first_level(spec));
}

std::uint64_t per_copy_count(const TwistSpec& spec) {
  std::uint64_t total = 0;
  for (int level = first_level(spec); level < spec.n; ++level) {
    total += std::uint64_t{1} << (spec.n - level - 1);
  }
  return total;
}

// Explicit specs are read per copy only when the count rules out the
// per-generation shape.
bool explicit_is_per_copy(const TwistSpec& spec) {
  return spec.permutations.size() != per_generation_count(spec) &&
         spec.permutations.size() == per_copy_count(spec);
}

}  // namespace

void validate(const TwistSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxDimension) {
    throw ValidationError("dimension n must lie in [1, " + std::to_string(kMaxDimension) + "], got " +
                          std::to_string(spec.n));
  }
  if (spec.base) {
    spec.base->validate();
    const auto total = static_cast<std::uint64_t>(spec.base->vertex_count) << spec.n;
    if (total > std::numeric_limits<Word>::max()) {
      throw ValidationError("base graph too large for dimension " + std::to_string(spec.n));
    }
  }
  if (spec.model != Model::kExplicit) {
    if (!spec.permutations.empty()) {
      throw ValidationError("permutations are only accepted for the explicit model");
    }
    return;
  }
  const auto count = spec.permutations.size();
  const bool per_gen = count == per_generation_count(spec);
  const bool per_copy = count == per_copy_count(spec);
  if (!per_gen && !per_copy) {
    throw ValidationError("explicit model needs " + std::to_string(per_generation_count(spec)) +
                          " tables (one per generation) or " + std::to_string(per_copy_count(spec)) +
                          " (one per generation and copy), got " + std::to_string(count));
  }
  const std::uint64_t h = base_size_of(spec);
  std::size_t index = 0;
  for (int level = first_level(spec); level < spec.n; ++level) {
    const std::uint64_t copies = explicit_is_per_copy(spec) ? std::uint64_t{1} << (spec.n - level - 1) : 1;
    for (std::uint64_t c = 0; c < copies; ++c, ++index) {
      const auto& table = spec.permutations[index];
      if (table.size() != (h << level)) {
        throw ValidationError("table " + std::to_string(index) + " for level " + std::to_string(level) +
                              " must have " + std::to_string(h << level) + " entries, got " +
                              std::to_string(table.size()));
      }
      if (auto violation = validate_perm(table)) {
        throw ValidationError("table " + std::to_string(index) + ": " + violation->message());
      }
    }
  }
}

AdjacencyList sigma_twist(const AdjacencyList& g0, const AdjacencyList& g1,
                          const PermutationTable& sigma) {
  const std::size_t m = g0.size();
  if (g1.size() != m || sigma.size() != m) {
    throw DimensionError("sigma_twist needs equal sizes, got |g0|=" + std::to_string(m) +
                         " |g1|=" + std::to_string(g1.size()) + " |sigma|=" + std::to_string(sigma.size()));
  }
  const auto offset = static_cast<std::uint32_t>(m);
  AdjacencyList out(2 * m);
  for (std::uint32_t x = 0; x < offset; ++x) {
    out[x] = g0[x];
    out[x].push_back(offset + sigma(x));
  }
  for (std::uint32_t y = 0; y < offset; ++y) {
    auto& list = out[offset + y];
    list.reserve(g1[y].size() + 1);
    for (auto v : g1[y]) list.push_back(offset + v);
    list.push_back(sigma.inverse_of(y));
  }
  return out;
}

TwistedCube::TwistedCube(TwistSpec spec)
    : spec_(std::move(spec)),
      n_(spec_.n),
      base_size_(base_size_of(spec_)),
      vertex_count_(static_cast<std::size_t>(base_size_) << n_) {}

TwistedCube::TwistedCube(TwistedCube&&) noexcept = default;
TwistedCube& TwistedCube::operator=(TwistedCube&&) noexcept = default;
TwistedCube::~TwistedCube() = default;

TwistedCube build_cube(const TwistSpec& spec) {
  validate(spec);
  TwistedCube cube(spec);
  const int n = spec.n;
  const std::uint64_t h = cube.base_size_;
  cube.per_copy_ = spec.model == Model::kIndependent ||
                   (spec.model == Model::kExplicit && explicit_is_per_copy(spec));
  cube.levels_.resize(static_cast<std::size_t>(n));

  std::size_t explicit_index = 0;
  for (int level = first_level(spec); level < n; ++level) {
    auto& slot = cube.levels_[static_cast<std::size_t>(level)];
    const std::uint64_t copies = cube.per_copy_ ? std::uint64_t{1} << (n - level - 1) : 1;
    slot.slots.resize(copies);
    switch (spec.model) {
      case Model::kDuplicube:
        slot.slots[0] = std::make_unique<PermutationTable>(uniform_perm_of_size(
            StreamKey{spec.seed, static_cast<std::uint32_t>(level), 0}, h << level));
        break;
      case Model::kIndependent:
        slot.once = std::make_unique<std::once_flag[]>(copies);
        break;
      case Model::kExplicit:
        for (std::uint64_t c = 0; c < copies; ++c) {
          slot.slots[c] = std::make_unique<PermutationTable>(spec.permutations[explicit_index++]);
        }
        break;
    }
  }
  return cube;
}

const PermutationTable& TwistedCube::resolve(int level, std::uint64_t suffix) const {
  if (level == 0 && base_size_ == 1) return trivial_;
  auto& slot = levels_[static_cast<std::size_t>(level)];
  if (!per_copy_) return *slot.slots[0];
  if (slot.once) {
    std::call_once(slot.once[suffix], [&] {
      slot.slots[suffix] = std::make_unique<PermutationTable>(uniform_perm_of_size(
          StreamKey{spec_.seed, static_cast<std::uint32_t>(level), suffix},
          static_cast<std::size_t>(base_size_) << level));
    });
  }
  return *slot.slots[suffix];
}

const PermutationTable& TwistedCube::table(int level, std::uint64_t suffix) const {
  if (level < 0 || level >= n_) throw ValidationError("level out of range");
  if (per_copy_ && suffix >= (std::uint64_t{1} << (n_ - level - 1))) {
    throw ValidationError("copy suffix out of range");
  }
  return resolve(level, suffix);
}

std::uint64_t TwistedCube::tables_at(int level) const {
  if (level < 0 || level >= n_) throw ValidationError("level out of range");
  return per_copy_ ? std::uint64_t{1} << (n_ - level - 1) : 1;
}

void TwistedCube::check_vertex(Vertex x) const {
  if (!contains(x)) {
    throw ValidationError("vertex " + std::to_string(x.word) + " out of range for " +
                          std::to_string(vertex_count_) + " vertices");
  }
}

Vertex TwistedCube::neighbor(Vertex x, int k) const {
  if (k < 1 || k > n_) {
    throw ValidationError("generation " + std::to_string(k) + " outside [1, " + std::to_string(n_) + "]");
  }
  check_vertex(x);
  return neighbor_unchecked(x, k);
}

Vertex TwistedCube::neighbor_unchecked(Vertex x, int k) const {
  const int level = k - 1;
  if (base_size_ == 1) {
    const Word stride = Word{1} << level;
    const Word prefix = x.word & (stride - 1);
    const Word high = x.word >> k;
    const auto& sigma = resolve(level, high);
    if ((x.word & stride) == 0) return Vertex((high << k) | stride | sigma(prefix));
    return Vertex((high << k) | sigma.inverse_of(prefix));
  }
  const std::uint64_t stride = static_cast<std::uint64_t>(base_size_) << level;
  const std::uint64_t q = x.word / stride;
  const std::uint64_t prefix = x.word - q * stride;
  const std::uint64_t high = q >> 1;
  const auto& sigma = resolve(level, high);
  const auto p = static_cast<std::uint32_t>(prefix);
  if ((q & 1) == 0) return Vertex(static_cast<Word>((2 * high + 1) * stride + sigma(p)));
  return Vertex(static_cast<Word>(2 * high * stride + sigma.inverse_of(p)));
}

std::vector<Vertex> TwistedCube::neighbors(Vertex x) const {
  check_vertex(x);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(n_) + (has_base() ? spec_.base->adjacency.size() : 0));
  for_each_neighbor(x, [&](Vertex y, int) { out.push_back(y); });
  return out;
}

int TwistedCube::degree(Vertex x) const {
  check_vertex(x);
  if (!has_base()) return n_;
  return n_ + static_cast<int>(spec_.base->adjacency[x.word % base_size_].size());
}

int TwistedCube::generation(Vertex x, Vertex y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw DomainError("generation number of a vertex with itself is undefined");
  const Word diff = (x.word / base_size_) ^ (y.word / base_size_);
  return diff == 0 ? 0 : 32 - std::countl_zero(diff);
}

int TwistedCube::coordinate_of(Vertex x, int k) const {
  if (k < 1 || k > n_) throw ValidationError("coordinate index out of range");
  check_vertex(x);
  return static_cast<int>(((x.word / base_size_) >> (k - 1)) & 1U);
}

std::vector<Vertex> TwistedCube::instance_set(Vertex x, int s) const {
  if (s < 0 || s > n_) throw ValidationError("instance level out of range");
  check_vertex(x);
  const Word twist = x.word / base_size_;
  const Word high = (twist >> s) << s;
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(base_size_) << s);
  const Word count = Word{1} << s;
  for (Word p = 0; p < count; ++p) {
    for (Word b = 0; b < base_size_; ++b) out.emplace_back((high | p) * base_size_ + b);
  }
  return out;
}

namespace {

template <class Cube>
std::vector<Vertex> bfs_ball(const Cube& cube, Vertex v, int r, int max_generation) {
  std::unordered_map<Word, int> dist;
  std::deque<Vertex> queue;
  dist.emplace(v.word, 0);
  queue.push_back(v);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const int du = dist[u.word];
    if (du == r) continue;
    cube.for_each_neighbor(u, [&](Vertex w, int gen) {
      if (gen > max_generation) return;
      if (dist.emplace(w.word, du + 1).second) queue.push_back(w);
    });
  }
  std::vector<Vertex> out;
  out.reserve(dist.size());
  for (const auto& [w, d] : dist) out.emplace_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Vertex> TwistedCube::ball(Vertex v, int r) const {
  check_vertex(v);
  if (r < 0) throw ValidationError("radius must be non-negative");
  return bfs_ball(*this, v, r, n_);
}

std::vector<Vertex> TwistedCube::restricted_ball(Vertex v, int r, int k) const {
  check_vertex(v);
  if (r < 0) throw ValidationError("radius must be non-negative");
  if (k < 1 || k > n_) throw ValidationError("generation bound out of range");
  return bfs_ball(*this, v, r, k - 1);
}

TwistSpec hypercube_spec(int n) {
  TwistSpec spec;
  spec.model = Model::kExplicit;
  spec.n = n;
  for (int level = 1; level < n; ++level) {
    const auto table = identity_perm(static_cast<unsigned>(level));
    spec.permutations.emplace_back(table.image().begin(), table.image().end());
  }
  return spec;
}

TwistSpec duplicube_spec(int n, std::uint64_t seed) {
  TwistSpec spec;
  spec.model = Model::kDuplicube;
  spec.n = n;
  spec.seed = seed;
  return spec;
}

TwistSpec independent_spec(int n, std::uint64_t seed) {
  TwistSpec spec = duplicube_spec(n, seed);
  spec.model = Model::kIndependent;
  return spec;
}

}  // namespace twistcube
