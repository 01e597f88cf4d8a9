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

#include "twistcube/spectral/spectrum.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "twistcube/errors.hpp"
#include "twistcube/topology/permutation.hpp"

namespace twistcube {

std::vector<double> dense_eigenvalues(const Graph& g) {
  const auto n = static_cast<lapack_int>(g.vertex_count());
  if (n == 0) return {};
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (lapack_int u = 0; u < n; ++u) {
    for (auto v : g.neighbors(static_cast<std::uint32_t>(u))) {
      a[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + v] = 1.0;
    }
  }
  std::vector<double> w(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_dsyevd_2stage(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
  if (info != 0) throw InternalError("dsyevd_2stage failed with info " + std::to_string(info));
  std::reverse(w.begin(), w.end());
  return w;
}

SpectrumResult full_spectrum(const TwistedCube& cube, bool force) {
  constexpr std::size_t kLimit = std::size_t{1} << 13;
  if (cube.vertex_count() > kLimit && !force) {
    throw GuardError("dense eigensolve is limited to 2^13 vertices (use force)");
  }
  SpectrumResult result;
  result.eigenvalues = dense_eigenvalues(to_graph(cube, force));
  result.n = cube.dimension();
  result.seed = cube.spec().seed;
  result.model = cube.model();
  return result;
}

void apply_adjacency(const TwistedCube& cube, const std::vector<double>& x, std::vector<double>& y) {
  const std::size_t n = cube.vertex_count();
  y.assign(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    double sum = 0.0;
    cube.for_each_neighbor(Vertex(static_cast<Word>(v)), [&](Vertex u, int) { sum += x[u.word]; });
    y[v] = sum;
  }
}

namespace {

using Vector = std::vector<double>;

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(double alpha, const Vector& x, Vector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

void project_out(const std::vector<Vector>& locked, Vector& v) {
  // Two Gram-Schmidt passes keep v orthogonal to the locked set to rounding.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& l : locked) axpy(-dot(l, v), l, v);
  }
}

struct RitzPair {
  double value = 0.0;
  Vector vector;
  int steps = 0;
  bool converged = false;
  bool empty = false;  // the complement of the locked set is trivial
};

// Largest eigenpair of T (alpha on the diagonal, beta off it), returning the
// eigenvector in `s`.
double top_tridiagonal(const std::vector<double>& alpha, const std::vector<double>& beta, Vector& s) {
  const auto m = static_cast<lapack_int>(alpha.size());
  std::vector<double> d = alpha;
  std::vector<double> e(beta.begin(), beta.begin() + (m - 1));
  e.push_back(0.0);
  lapack_int found = 0;
  double w[1];
  s.assign(static_cast<std::size_t>(m), 0.0);
  std::vector<lapack_int> support(2);
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', m, d.data(), e.data(), 0.0, 0.0, m, m,
                                         0.0, &found, w, s.data(), m, support.data());
  if (info != 0 || found != 1) throw InternalError("dstevr failed with info " + std::to_string(info));
  return w[0];
}

// Lanczos without a stored basis: the three-term recurrence gives the
// tridiagonal T, and a second identical pass assembles the Ritz vector. Loss
// of orthogonality only spawns copies of converged values, so the top Ritz
// value stays reliable.
RitzPair lanczos_top(const std::function<void(const Vector&, Vector&)>& apply, std::size_t n,
                     const std::vector<Vector>& locked, const TopEigenOptions& options, std::uint64_t stream_id) {
  RitzPair out;
  Vector start(n);
  auto stream = task_stream(options.seed, stream_id);
  for (auto& x : start) x = stream.uniform() - 0.5;
  project_out(locked, start);
  const double start_norm = norm(start);
  if (start_norm < 1e-9 * std::sqrt(static_cast<double>(n))) {
    out.empty = true;
    return out;
  }
  for (auto& x : start) x /= start_norm;

  std::vector<double> alpha, beta;
  Vector s;
  Vector q = start, q_prev(n, 0.0), w(n);
  double beta_prev = 0.0;
  double theta = 0.0;
  int steps = 0;
  for (int j = 0; j < options.max_iterations; ++j) {
    apply(q, w);
    project_out(locked, w);
    const double a = dot(q, w);
    axpy(-a, q, w);
    axpy(-beta_prev, q_prev, w);
    const double b = norm(w);
    alpha.push_back(a);
    beta.push_back(b);
    steps = j + 1;
    theta = top_tridiagonal(alpha, beta, s);
    const double scale = std::max(1.0, std::abs(theta));
    if (b * std::abs(s.back()) <= options.tolerance * scale || b <= 1e-12 * scale) {
      out.converged = true;
      break;
    }
    q_prev.swap(q);
    for (std::size_t i = 0; i < n; ++i) q[i] = w[i] / b;
    beta_prev = b;
  }

  // Replay the recurrence to assemble y = sum_i s_i q_i.
  Vector y(n, 0.0);
  q = start;
  std::fill(q_prev.begin(), q_prev.end(), 0.0);
  beta_prev = 0.0;
  for (int j = 0; j < steps; ++j) {
    axpy(s[static_cast<std::size_t>(j)], q, y);
    if (j + 1 == steps) break;
    apply(q, w);
    project_out(locked, w);
    axpy(-alpha[static_cast<std::size_t>(j)], q, w);
    axpy(-beta_prev, q_prev, w);
    const double b = beta[static_cast<std::size_t>(j)];
    q_prev.swap(q);
    for (std::size_t i = 0; i < n; ++i) q[i] = w[i] / b;
    beta_prev = b;
  }
  project_out(locked, y);
  const double y_norm = norm(y);
  for (auto& x : y) x /= y_norm;
  out.value = theta;
  out.vector = std::move(y);
  out.steps = steps;
  return out;
}

double residual_norm(const std::function<void(const Vector&, Vector&)>& apply, const Vector& v, double lambda) {
  Vector av;
  apply(v, av);
  axpy(-lambda, v, av);
  return norm(av);
}

}  // namespace

TopEigenResult top_eigenvalues(const TwistedCube& cube, int count, const TopEigenOptions& options, bool force) {
  if (count < 1 || count > 4) throw ValidationError("count must lie in [1, 4]");
  constexpr std::size_t kLimit = std::size_t{1} << 22;
  if (cube.vertex_count() > kLimit && !force) {
    throw GuardError("matrix-free eigensolver is limited to 2^22 vertices");
  }
  const std::size_t n = cube.vertex_count();
  const auto apply = [&cube](const Vector& x, Vector& y) { apply_adjacency(cube, x, y); };

  TopEigenResult result;
  result.converged = true;
  std::vector<Vector> locked;
  std::vector<std::pair<double, double>> found;  // (value, residual)

  if (!cube.has_base()) {
    const int dim = cube.dimension();
    Vector ones(n, 1.0 / std::sqrt(static_cast<double>(n)));
    found.emplace_back(dim, residual_norm(apply, ones, dim));
    locked.push_back(std::move(ones));
    if (count > 1 && n > 1) {
      Vector half(n);
      const double scale = 1.0 / std::sqrt(static_cast<double>(n));
      for (std::size_t v = 0; v < n; ++v) {
        half[v] = cube.coordinate_of(Vertex(static_cast<Word>(v)), dim) == 0 ? scale : -scale;
      }
      found.emplace_back(dim - 2, residual_norm(apply, half, dim - 2));
      locked.push_back(std::move(half));
    }
  }

  // Lanczos on the complement supplies any value that might exceed the
  // deflated ones, so it always runs at least once.
  const int wanted = std::max(1, count - static_cast<int>(found.size()));
  for (int i = 0; i < wanted; ++i) {
    RitzPair pair = lanczos_top(apply, n, locked, options, static_cast<std::uint64_t>(i));
    if (pair.empty) break;
    result.iterations += pair.steps;
    result.converged = result.converged && pair.converged;
    const double lambda = dot(pair.vector, [&] {
      Vector av;
      apply(pair.vector, av);
      return av;
    }());
    found.emplace_back(lambda, residual_norm(apply, pair.vector, lambda));
    project_out(locked, pair.vector);
    const double len = norm(pair.vector);
    for (auto& x : pair.vector) x /= len;
    locked.push_back(std::move(pair.vector));
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  if (found.size() > static_cast<std::size_t>(count)) found.resize(static_cast<std::size_t>(count));
  for (const auto& [value, residual] : found) {
    result.values.push_back(value);
    result.residuals.push_back(residual);
  }
  return result;
}

}  // namespace twistcube
