// Copyright 2026 The owamilp Authors
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

#include <deque>
#include <random>
#include <set>

#include "doctest.h"
#include "owa/domains.hpp"
#include "owa/errors.hpp"
#include "owa/instances.hpp"
#include "support.hpp"

using namespace owa;

namespace {

bool connected(const Graph& g, const BinaryVector& x, int s, int t) {
  std::vector<char> seen(g.vertex_count() + 1, 0);
  std::deque<int> queue{s};
  seen[s] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : g.neighbors(u)) {
      if (x[e] && !seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen[t];
}

bool perfect(const Graph& g, const BinaryVector& x) {
  std::vector<int> degree(g.vertex_count() + 1, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (x[e]) {
      ++degree[g.edges()[e].first];
      ++degree[g.edges()[e].second];
    }
  }
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (degree[v] != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("graph normalizes and validates edges") {
  const Graph g(3, {{2, 1}, {3, 2}});
  CHECK(g.edges()[0] == std::pair{1, 2});
  CHECK(g.find_edge(3, 2) == 1);
  CHECK(g.find_edge(1, 3) == -1);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InvariantError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvariantError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), InvariantError);
  const Graph h = Graph(4, {{1, 2}, {2, 4}, {3, 4}}).without_vertex(2);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edges() == std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("cardinality domain enumerates all k-subsets") {
  const auto dom = explicit_cardinality_domain(5, 2);
  const auto pts = enumerate(dom);
  CHECK(pts.size() == 10);
  for (const auto& x : pts) CHECK(contains(dom, x));
  CHECK_FALSE(contains(dom, BinaryVector{1, 1, 1, 0, 0}));
  CHECK_THROWS_AS(enumerate(dom, 3), EnumerationCapExceeded);
}

TEST_CASE("explicit point domain contains exactly its points") {
  const std::vector<BinaryVector> pts = {{1, 0, 1}, {0, 1, 1}};
  const auto dom = explicit_points_domain(pts);
  CHECK(enumerate(dom) == pts);
  CHECK(contains(dom, pts[0]));
  CHECK(contains(dom, pts[1]));
  CHECK_FALSE(contains(dom, BinaryVector{1, 1, 0}));
  CHECK_FALSE(contains(dom, BinaryVector{0, 0, 1}));
  CHECK_THROWS(explicit_points_domain({}));
}

TEST_CASE("shortest paths on the 2x2 grid") {
  const Graph g = grid_graph(2);
  CHECK(g.edge_count() == 5);
  const auto dom = shortest_path_domain(g, 1, 4);
  const auto pts = enumerate(dom);
  CHECK(pts.size() == 4);  // 1-2-4, 1-3-4, 1-2-3-4, 1-3-2-4
  for (const auto& x : pts) {
    CHECK(contains(dom, x));
    CHECK(connected(g, x, 1, 4));
  }
  CHECK_THROWS_AS(shortest_path_domain(g, 2, 2), InvariantError);
}

TEST_CASE("flow membership equals s-t connectivity on the 3x3 grid") {
  const Graph g = grid_graph(3);
  const auto dom = shortest_path_domain(g, 1, 9);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    BinaryVector x(g.edge_count());
    for (auto& b : x) b = (rng() % 3) != 0;
    CHECK(contains(dom, x) == connected(g, x, 1, 9));
  }
  for (const auto& x : enumerate(dom)) CHECK(connected(g, x, 1, 9));
}

TEST_CASE("path extraction follows the flow") {
  const Graph g = grid_graph(3);
  const auto dom = shortest_path_domain(g, 1, 9);
  const auto pts = enumerate(dom);
  for (std::size_t k = 0; k < pts.size(); k += 37) {
    const auto aux = complete_aux(dom, pts[k]);
    REQUIRE(aux);
    std::vector<double> values(pts[k].begin(), pts[k].end());
    values.insert(values.end(), aux->begin(), aux->end());
    const auto path = extract_path(dom, values);
    REQUIRE(path.size() >= 2);
    CHECK(path.front() == 1);
    CHECK(path.back() == 9);
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      const int e = g.find_edge(path[s], path[s + 1]);
      REQUIRE(e >= 0);
      CHECK(pts[k][e] == 1);
    }
  }
}

TEST_CASE("perfect matchings on small grids") {
  const auto two = perfect_matching_domain(grid_graph(2));
  CHECK(enumerate(two).size() == 2);
  CHECK_THROWS_AS(perfect_matching_domain(grid_graph(3)), InvariantError);
  const Graph g = grid_graph(3).without_vertex(9);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 14);
  const auto dom = perfect_matching_domain(g);
  const auto pts = enumerate(dom);
  CHECK(!pts.empty());
  std::set<BinaryVector> unique(pts.begin(), pts.end());
  CHECK(unique.size() == pts.size());
  // Exhaustive cross-check against the degree definition.
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.edge_count()); ++mask) {
    BinaryVector x(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) x[e] = (mask >> e) & 1u;
    if (perfect(g, x)) {
      ++count;
      CHECK(unique.count(x) == 1);
    }
  }
  CHECK(count == pts.size());
}

TEST_CASE("domain rows carry their tags") {
  const auto dom = shortest_path_domain(grid_graph(2), 1, 4);
  std::set<std::string> tags;
  for (const auto& row : dom.constraints) tags.insert(row.tag);
  CHECK(tags == std::set<std::string>{"SPPb", "SPPc", "SPPd", "SPPe"});
  CHECK(dom.aux_count == 10);
}
