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

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "twistcube/twistcube.hpp"

using namespace twistcube;

namespace {

Vertex tuple(std::initializer_list<int> coords) {
  const std::vector<int> v(coords);
  return from_coordinates(v);
}

std::set<std::pair<std::uint32_t, std::uint32_t>> edges_of(const AdjacencyList& adj) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < adj.size(); ++u) {
    for (auto v : adj[u]) edges.emplace(std::min(u, v), std::max(u, v));
  }
  return edges;
}

// The copy of G_L whose coordinates L+1..n equal `suffix`, assembled by
// repeated sigma-twists of the copies one level down.
AdjacencyList twist_recursively(const TwistedCube& cube, int level, std::uint64_t suffix) {
  if (level == 0) return cube.spec().base ? cube.spec().base->adjacency : AdjacencyList{{}};
  const auto g0 = twist_recursively(cube, level - 1, 2 * suffix);
  const auto g1 = twist_recursively(cube, level - 1, 2 * suffix + 1);
  return sigma_twist(g0, g1, cube.table(level - 1, cube.per_copy() ? suffix : 0));
}

}  // namespace

TEST_SUITE("vertex") {
  TEST_CASE("coordinates round-trip through the word encoding") {
    for (Word w = 0; w < 64; ++w) {
      const Vertex v(w);
      CHECK(from_coordinates(to_coordinates(v, 6)) == v);
    }
    const Vertex v = tuple({1, 0, 1});
    CHECK(v.word == 5);
    CHECK(coordinate(v, 1) == 1);
    CHECK(coordinate(v, 2) == 0);
    CHECK(coordinate(v, 3) == 1);
    CHECK(to_tuple_string(v, 3) == "(1,0,1)");
  }

  TEST_CASE("generation number is the largest differing coordinate") {
    CHECK(generation_number(tuple({0, 1, 1}), tuple({1, 1, 1}), 3) == 1);
    CHECK(generation_number(tuple({0, 0, 0}), tuple({0, 0, 1}), 3) == 3);
    CHECK(generation_number(tuple({1, 0, 0}), tuple({0, 1, 0}), 3) == 2);
    CHECK_THROWS_AS(generation_number(Vertex(3), Vertex(3), 3), DomainError);
    CHECK_THROWS_AS(generation_number(Vertex(3), Vertex(9), 3), DomainError);
  }

  TEST_CASE("instance sets partition the cube") {
    const int n = 8;
    CHECK(instance_set(Vertex(77), 0, n) == std::vector<Vertex>{Vertex(77)});
    CHECK(instance_set(Vertex(77), n, n).size() == 256);
    for (int s = 0; s <= n; ++s) {
      std::vector<int> hits(256, 0);
      for (Word x = 0; x < 256; ++x) {
        const auto set = instance_set(Vertex(x), s, n);
        REQUIRE(set.size() == (std::size_t{1} << s));
        CHECK(std::find(set.begin(), set.end(), Vertex(x)) != set.end());
        for (auto y : set) CHECK((y.word >> s) == (x >> s));
        if ((x & ((1U << s) - 1)) == 0) {
          for (auto y : set) ++hits[y.word];
        }
      }
      CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
    CHECK_THROWS_AS(instance_set(Vertex(0), 9, n), ValidationError);
  }
}

TEST_SUITE("sigma_twist") {
  TEST_CASE("two edges joined by the identity form a 4-cycle") {
    const AdjacencyList edge{{1}, {0}};
    const auto square = sigma_twist(edge, edge, identity_perm(1));
    CHECK(edges_of(square) == oracle::hypercube_edges(2));
  }

  TEST_CASE("two isolated vertices become a single edge") {
    const AdjacencyList point{{}};
    const auto g1 = sigma_twist(point, point, PermutationTable());
    CHECK(edges_of(g1) == std::set<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}});
  }

  TEST_CASE("two 4-cycles joined by an adjacent transposition") {
    const AdjacencyList c4{{1, 3}, {0, 2}, {1, 3}, {0, 2}};
    const auto g = sigma_twist(c4, c4, PermutationTable({1, 0, 2, 3}));
    const std::set<std::pair<std::uint32_t, std::uint32_t>> by_hand{
        {0, 1}, {1, 2}, {2, 3}, {0, 3},  // first copy
        {4, 5}, {5, 6}, {6, 7}, {4, 7},  // second copy
        {0, 5}, {1, 4}, {2, 6}, {3, 7},  // x -> 4 + sigma(x)
    };
    CHECK(edges_of(g) == by_hand);
    for (const auto& list : g) CHECK(list.size() == 3);
  }

  TEST_CASE("mismatched sizes are rejected") {
    const AdjacencyList edge{{1}, {0}};
    const AdjacencyList point{{}};
    CHECK_THROWS_AS(sigma_twist(edge, point, identity_perm(1)), DimensionError);
    CHECK_THROWS_AS(sigma_twist(edge, edge, identity_perm(2)), DimensionError);
  }
}

TEST_SUITE("build_cube") {
  TEST_CASE("identity tables give the hypercube") {
    for (int n = 1; n <= 10; ++n) {
      const auto cube = build_cube(hypercube_spec(n));
      CHECK(oracle::edge_set(to_graph(cube)) == oracle::hypercube_edges(n));
    }
  }

  TEST_CASE("construction equals iterated sigma-twists") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      for (auto spec : {duplicube_spec(7, seed), independent_spec(7, seed)}) {
        const auto cube = build_cube(spec);
        CHECK(edges_of(twist_recursively(cube, 7, 0)) == oracle::edge_set(to_graph(cube)));
      }
    }
    TwistSpec with_base = independent_spec(5, 11);
    with_base.base = BaseGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto cube = build_cube(with_base);
    CHECK(edges_of(twist_recursively(cube, 5, 0)) == oracle::edge_set(to_graph(cube)));
  }

  TEST_CASE("building twice is byte-identical") {
    const auto a = build_cube(duplicube_spec(8, 42));
    const auto b = build_cube(duplicube_spec(8, 42));
    std::ostringstream ea, eb;
    write_edge_list(ea, a);
    write_edge_list(eb, b);
    CHECK(ea.str() == eb.str());
    CHECK(!ea.str().empty());
    const auto c = build_cube(duplicube_spec(8, 43));
    std::ostringstream ec;
    write_edge_list(ec, c);
    CHECK(ec.str() != ea.str());
  }

  TEST_CASE("every vertex of a random duplicube has degree n") {
    const auto cube = build_cube(duplicube_spec(10, 5));
    const auto g = to_graph(cube);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 10);
    CHECK(g.edge_count() == 10 * 512);
  }

  TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(build_cube(duplicube_spec(0, 1)), ValidationError);
    CHECK_THROWS_AS(build_cube(duplicube_spec(kMaxDimension + 1, 1)), ValidationError);
    TwistSpec spec;
    spec.model = Model::kExplicit;
    spec.n = 3;
    CHECK_THROWS_AS(build_cube(spec), ValidationError);
    spec.permutations = {{0, 1}, {0, 1, 2}};
    CHECK_THROWS_AS(build_cube(spec), ValidationError);
    spec.permutations = {{0, 1}, {0, 1, 2, 2}};
    CHECK_THROWS_AS(build_cube(spec), ValidationError);
    spec.permutations = {{1, 0}, {3, 2, 1, 0}};
    CHECK_NOTHROW(build_cube(spec));
    // Per-copy shape: one table at level 2, two at level 1.
    spec.permutations = {{1, 0}, {0, 1}, {3, 2, 1, 0}};
    const auto cube = build_cube(spec);
    CHECK(cube.per_copy());
    CHECK(cube.tables_at(1) == 2);
    CHECK(cube.table(1, 0).image()[0] == 1);
    CHECK(cube.table(1, 1).image()[0] == 0);
  }
}

TEST_SUITE("neighbors") {
  TEST_CASE("identity tables flip one coordinate") {
    const auto cube = build_cube(hypercube_spec(6));
    for (Word x = 0; x < 64; ++x) {
      for (int k = 1; k <= 6; ++k) CHECK(cube.neighbor(Vertex(x), k).word == (x ^ (1U << (k - 1))));
    }
  }

  TEST_CASE("the first generation always flips coordinate 1") {
    for (auto spec : {duplicube_spec(6, 9), independent_spec(6, 9)}) {
      const auto cube = build_cube(spec);
      for (Word x = 0; x < 64; ++x) CHECK(cube.neighbor(Vertex(x), 1).word == (x ^ 1U));
    }
  }

  TEST_CASE("cyclic shift at the top level, evaluated by hand") {
    // sigma on (x1, x2): 00 -> 01 -> 10 -> 11 -> 00, so on words 0 -> 2 -> 1 -> 3 -> 0.
    TwistSpec spec;
    spec.model = Model::kExplicit;
    spec.n = 3;
    spec.permutations = {{0, 1}, {2, 3, 1, 0}};
    const auto cube = build_cube(spec);
    CHECK(cube.neighbor(tuple({0, 0, 0}), 3) == tuple({0, 1, 1}));
    const std::vector<std::pair<Word, Word>> by_hand{{0, 6}, {1, 7}, {2, 5}, {3, 4}};
    for (const auto& [x, y] : by_hand) {
      CHECK(cube.neighbor(Vertex(x), 3).word == y);
      CHECK(cube.neighbor(Vertex(y), 3).word == x);
    }
  }

  TEST_CASE("neighbors of the origin of Q3") {
    const auto cube = build_cube(hypercube_spec(3));
    const auto nb = cube.neighbors(Vertex(0));
    const std::vector<Vertex> expected{tuple({1, 0, 0}), tuple({0, 1, 0}), tuple({0, 0, 1})};
    CHECK(nb == expected);
  }

  TEST_CASE("a single-edge base adds one to every degree") {
    TwistSpec spec = duplicube_spec(5, 3);
    spec.base = BaseGraph::from_edges(2, {{0, 1}});
    const auto cube = build_cube(spec);
    CHECK(cube.vertex_count() == 64);
    for (Word x = 0; x < 64; ++x) CHECK(cube.degree(Vertex(x)) == 6);
  }

  TEST_CASE("matchings are involutions and generations are consistent") {
    for (int n = 1; n <= 10; ++n) {
      for (auto spec : {duplicube_spec(n, 100 + n), independent_spec(n, 200 + n)}) {
        const auto cube = build_cube(spec);
        for (Word x = 0; x < cube.vertex_count(); ++x) {
          for (int k = 1; k <= n; ++k) {
            const Vertex y = cube.neighbor(Vertex(x), k);
            REQUIRE(y != Vertex(x));
            CHECK(cube.neighbor(y, k) == Vertex(x));
            CHECK(generation_number(Vertex(x), y, n) == k);
          }
        }
      }
    }
  }

  TEST_CASE("non-power-of-two base keeps the involution and regularity") {
    TwistSpec spec = independent_spec(6, 17);
    spec.base = BaseGraph::from_edges(3, {{0, 1}, {1, 2}});
    const auto cube = build_cube(spec);
    const std::vector<int> base_degree{1, 2, 1};
    for (Word x = 0; x < cube.vertex_count(); ++x) {
      CHECK(cube.degree(Vertex(x)) == 6 + base_degree[x % 3]);
      for (int k = 1; k <= 6; ++k) CHECK(cube.neighbor(cube.neighbor(Vertex(x), k), k) == Vertex(x));
    }
  }

  TEST_CASE("out-of-range queries are rejected") {
    const auto cube = build_cube(duplicube_spec(4, 1));
    CHECK_THROWS_AS(cube.neighbor(Vertex(0), 0), ValidationError);
    CHECK_THROWS_AS(cube.neighbor(Vertex(0), 5), ValidationError);
    CHECK_THROWS_AS(cube.neighbor(Vertex(16), 1), ValidationError);
  }

  TEST_CASE("independent tables differ between copies") {
    const auto cube = build_cube(independent_spec(10, 5));
    std::size_t differing = 0;
    for (std::uint64_t s = 1; s < cube.tables_at(4); ++s) differing += !(cube.table(4, s) == cube.table(4, 0));
    CHECK(differing == cube.tables_at(4) - 1);
  }

  TEST_CASE("concurrent lazy resolution matches a sequential build") {
    const auto reference = to_graph(build_cube(independent_spec(12, 77)));
    const auto cube = build_cube(independent_spec(12, 77));
    std::vector<std::vector<Vertex>> seen(4);
    {
      std::vector<std::jthread> pool;
      for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t] {
          for (Word x = 0; x < cube.vertex_count(); ++x) {
            const Word v = (x * 2654435761U + static_cast<Word>(t) * 977U) % static_cast<Word>(cube.vertex_count());
            for (auto y : cube.neighbors(Vertex(v))) seen[static_cast<std::size_t>(t)].push_back(y);
          }
        });
      }
    }
    CHECK(to_graph(cube) == reference);
  }
}

TEST_SUITE("balls") {
  TEST_CASE("radius zero and one") {
    const auto q = build_cube(hypercube_spec(7));
    CHECK(q.ball(Vertex(5), 0) == std::vector<Vertex>{Vertex(5)});
    CHECK(q.ball(Vertex(5), 1).size() == 8);
  }

  TEST_CASE("restricted balls stay inside their instance") {
    for (int n = 2; n <= 10; n += 4) {
      const auto cube = build_cube(duplicube_spec(n, 31));
      for (Word v = 0; v < cube.vertex_count(); v += 7) {
        for (int k = 1; k <= n; ++k) {
          for (int r = 0; r <= 3; ++r) {
            const auto rb = cube.restricted_ball(Vertex(v), r, k);
            const auto b = cube.ball(Vertex(v), r);
            const auto inst = cube.instance_set(Vertex(v), k - 1);
            CHECK(rb.size() <= (std::size_t{1} << (k - 1)));
            CHECK(std::includes(b.begin(), b.end(), rb.begin(), rb.end()));
            CHECK(std::includes(inst.begin(), inst.end(), rb.begin(), rb.end()));
          }
        }
      }
    }
  }
}

TEST_SUITE("manifest") {
  TEST_CASE("write -> read -> write is byte-stable") {
    TwistSpec explicit_spec;
    explicit_spec.model = Model::kExplicit;
    explicit_spec.n = 3;
    explicit_spec.seed = 9;
    explicit_spec.permutations = {{1, 0}, {2, 3, 1, 0}};
    TwistSpec based = independent_spec(4, 123456789012345ULL);
    based.base = BaseGraph::from_edges(3, {{0, 1}, {1, 2}});
    for (const auto& spec : {duplicube_spec(10, 7), explicit_spec, based}) {
      const std::string text = manifest_to_json(spec);
      const TwistSpec back = manifest_from_json(text);
      CHECK(back == spec);
      CHECK(manifest_to_json(back) == text);
    }
  }

  TEST_CASE("malformed manifests are rejected") {
    CHECK_THROWS_AS(manifest_from_json("{"), ValidationError);
    CHECK_THROWS_AS(manifest_from_json("[]"), ValidationError);
    CHECK_THROWS_AS(manifest_from_json(R"({"model":"duplicube","n":4,"seed":1,"extra":1})"), ValidationError);
    CHECK_THROWS_AS(manifest_from_json(R"({"model":"mystery","n":4,"seed":1})"), ValidationError);
    CHECK_THROWS_AS(manifest_from_json(R"({"model":"duplicube","n":"four","seed":1})"), ValidationError);
    CHECK_THROWS_AS(manifest_from_json(R"({"model":"explicit","n":3,"seed":1,"permutations":[[0,0],[0,1,2,3]]})"),
                    ValidationError);
  }

  TEST_CASE("permutation files round-trip") {
    const std::vector<std::vector<std::uint32_t>> tables{{0}, {1, 0}, {3, 1, 0, 2}};
    CHECK(permutations_from_json(permutations_to_json(tables)) == tables);
  }

  TEST_CASE("edge list lines are sorted with u < v") {
    const auto cube = build_cube(hypercube_spec(2));
    std::ostringstream out;
    write_edge_list(out, cube);
    CHECK(out.str() == "0 1\n0 2\n1 3\n2 3\n");
  }

  TEST_CASE("DOT export is limited to small cubes") {
    std::ostringstream out;
    write_dot(out, build_cube(duplicube_spec(3, 1)));
    CHECK(out.str().find("graph") != std::string::npos);
    std::ostringstream big;
    CHECK_THROWS_AS(write_dot(big, build_cube(duplicube_spec(9, 1))), GuardError);
    CHECK_NOTHROW(write_dot(big, build_cube(duplicube_spec(9, 1)), true));
  }
}

TEST_SUITE("graph") {
  TEST_CASE("invalid edge lists are rejected") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), ValidationError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ValidationError);
    CHECK_THROWS_AS(BaseGraph::from_edges(2, {{0, 1}, {0, 1}}), ValidationError);
    const auto g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  }
}
