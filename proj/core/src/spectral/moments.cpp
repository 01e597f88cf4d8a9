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

#include "twistcube/spectral/moments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "twistcube/errors.hpp"

namespace twistcube {

namespace {

__extension__ using u128 = unsigned __int128;

BigInt to_big(u128 value) {
  BigInt high = static_cast<std::uint64_t>(value >> 64);
  return (high << 64) + static_cast<std::uint64_t>(value);
}

// Walk counts from one source, layer by layer, kept sparse.
class WalkLayers {
 public:
  explicit WalkLayers(std::size_t vertex_count) : dense_(vertex_count, 0) {}

  // Fills layers_[0..radius] with (vertex, walks of that length).
  void run(const TwistedCube& cube, Vertex source, int radius) {
    layers_.resize(static_cast<std::size_t>(radius) + 1);
    layers_[0].assign(1, {source.word, 1});
    for (int j = 1; j <= radius; ++j) {
      auto& next = layers_[static_cast<std::size_t>(j)];
      next.clear();
      for (const auto& [v, count] : layers_[static_cast<std::size_t>(j - 1)]) {
        cube.for_each_neighbor(Vertex(v), [&](Vertex u, int) {
          if (dense_[u.word] == 0) touched_.push_back(u.word);
          dense_[u.word] += count;
        });
      }
      for (auto u : touched_) {
        next.emplace_back(u, dense_[u]);
        dense_[u] = 0;
      }
      touched_.clear();
    }
  }

  // sum_v w_a(v) w_b(v) with b in {a, a+1}.
  std::uint64_t inner(int a, int b) {
    const auto& la = layers_[static_cast<std::size_t>(a)];
    if (a == b) {
      std::uint64_t s = 0;
      for (const auto& entry : la) s += entry.second * entry.second;
      return s;
    }
    const auto& lb = layers_[static_cast<std::size_t>(b)];
    for (const auto& [v, count] : lb) dense_[v] = count;
    std::uint64_t s = 0;
    for (const auto& [v, count] : la) s += count * dense_[v];
    for (const auto& entry : lb) dense_[entry.first] = 0;
    return s;
  }

 private:
  std::vector<std::uint64_t> dense_;
  std::vector<Word> touched_;
  std::vector<std::vector<std::pair<Word, std::uint64_t>>> layers_;
};

std::uint64_t closed_from_layers(WalkLayers& layers, int k) {
  const int a = k / 2;
  return layers.inner(a, k - a);
}

}  // namespace

std::uint64_t catalan(int m) {
  if (m < 0 || m > 33) throw DomainError("catalan index out of range");
  std::uint64_t c = 1;
  for (int i = 0; i < m; ++i) {
    // C_{i+1} = C_i * 2(2i+1) / (i+2), exact at every step.
    c = c * 2 * static_cast<std::uint64_t>(2 * i + 1) / static_cast<std::uint64_t>(i + 2);
  }
  return c;
}

double semicircle_moment(int k) {
  if (k < 0) throw DomainError("moment order must be non-negative");
  if (k % 2 == 1) return 0.0;
  return static_cast<double>(catalan(k / 2));
}

double semicircle_density(double x) {
  if (x <= -2.0 || x >= 2.0) return 0.0;
  return 2.0 / (4.0 * std::numbers::pi * std::numbers::pi) * std::sqrt(4.0 - x * x);
}

double semicircle_density_normalized(double x) {
  if (x <= -2.0 || x >= 2.0) return 0.0;
  return std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
}

double semicircle_cdf(double x) {
  if (x <= -2.0) return 0.0;
  if (x >= 2.0) return 1.0;
  return 0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * std::numbers::pi) + std::asin(x / 2.0) / std::numbers::pi;
}

double gaussian_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

std::vector<std::uint64_t> closed_walks_at(const TwistedCube& cube, Vertex v, int k_max) {
  if (k_max < 0 || k_max > 10) throw ValidationError("k_max must lie in [0, 10]");
  if (!cube.contains(v)) throw ValidationError("vertex out of range");
  WalkLayers layers(cube.vertex_count());
  layers.run(cube, v, (k_max + 1) / 2);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) out[static_cast<std::size_t>(k)] = closed_from_layers(layers, k);
  return out;
}

MomentReport walk_moments(const TwistedCube& cube, int k_max, int threads, bool force) {
  if (k_max < 1 || k_max > 10) throw ValidationError("k_max must lie in [1, 10]");
  if (cube.dimension() > 20 && !force) throw GuardError("walk moments are limited to n <= 20");
  const std::size_t count = cube.vertex_count();
  const int radius = (k_max + 1) / 2;
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  std::vector<std::vector<u128>> partial(workers, std::vector<u128>(static_cast<std::size_t>(k_max) + 1, 0));
  std::atomic<std::size_t> next_block{0};
  constexpr std::size_t kBlock = 64;
  auto work = [&](unsigned id) {
    WalkLayers layers(count);
    auto& sums = partial[id];
    for (;;) {
      const std::size_t begin = next_block.fetch_add(kBlock);
      if (begin >= count) break;
      const std::size_t end = std::min(count, begin + kBlock);
      for (std::size_t v = begin; v < end; ++v) {
        layers.run(cube, Vertex(static_cast<Word>(v)), radius);
        for (int k = 1; k <= k_max; ++k) sums[static_cast<std::size_t>(k)] += closed_from_layers(layers, k);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  MomentReport report;
  report.n = cube.dimension();
  report.seed = cube.spec().seed;
  report.model = cube.model();
  const double n = static_cast<double>(cube.dimension());
  for (int k = 1; k <= k_max; ++k) {
    u128 total = 0;
    for (const auto& sums : partial) total += sums[static_cast<std::size_t>(k)];
    MomentRow row;
    row.k = k;
    row.closed_walks = to_big(total);
    const long double exact = static_cast<long double>(total);
    row.m_k = static_cast<double>(exact / (static_cast<long double>(count) * std::pow(static_cast<long double>(n), k / 2.0L)));
    row.catalan = semicircle_moment(k);
    row.abs_error = std::abs(row.m_k - row.catalan);
    report.rows.push_back(std::move(row));
  }
  return report;
}

double moment_from_spectrum(std::span<const double> eigenvalues, int n, int k) {
  if (eigenvalues.empty()) throw ValidationError("empty spectrum");
  if (n < 1) throw DomainError("dimension must be positive");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  long double sum = 0.0L;
  for (double lambda : eigenvalues) sum += std::pow(static_cast<long double>(lambda * scale), k);
  return static_cast<double>(sum / static_cast<long double>(eigenvalues.size()));
}

}  // namespace twistcube
