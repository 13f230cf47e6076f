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

#ifndef OWA_DOMAINS_HPP_
#define OWA_DOMAINS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "owa/core.hpp"
#include "owa/milp/model.hpp"

namespace owa {

// Undirected simple graph with vertices 1..vertex_count.
class Graph {
 public:
  Graph() = default;
  // Normalizes each edge to u < v; throws InvariantError on self-loops,
  // duplicates or out-of-range ids.
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Index of edge {u,v} or -1.
  int find_edge(int u, int v) const;
  // Neighbors of u in ascending order with the connecting edge index.
  const std::vector<std::pair<int, int>>& neighbors(int u) const {
    return adjacency_[u];
  }
  // Drops vertex v and its edges; later ids shift down by one.
  Graph without_vertex(int v) const;

  // Optional grid coordinates, one (x, y) per vertex when present.
  std::vector<std::pair<int, int>> coords;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

enum class DomainKind {
  kExplicitCardinality,
  kExplicitPoints,
  kShortestPath,
  kPerfectMatching
};

const char* to_string(DomainKind kind);

// Linear description of Q over variables [x (n_design) | aux (aux_count)].
struct DomainSpec {
  DomainKind kind = DomainKind::kExplicitCardinality;
  int n_design = 0;
  int aux_count = 0;
  std::vector<std::string> design_names;
  std::vector<std::string> aux_names;
  std::vector<double> aux_lower;
  std::vector<double> aux_upper;
  std::vector<milp::Constraint> constraints;

  int cardinality = 0;              // explicit cardinality
  std::vector<BinaryVector> points;  // explicit points
  Graph graph;                      // shortest path / perfect matching
  int source = 0;
  int sink = 0;

  std::string label() const { return to_string(kind); }
};

DomainSpec explicit_cardinality_domain(int n, int k);
// Q given as a list of binary vectors; modeled as their convex hull.
DomainSpec explicit_points_domain(std::vector<BinaryVector> points);
DomainSpec shortest_path_domain(const Graph& g, int source, int sink);
DomainSpec perfect_matching_domain(const Graph& g);

// Default cap on enumerated points: 10^7, or the OWA_ENUM_CAP environment
// variable when set to a positive integer.
std::size_t default_enumeration_cap();

// Calls visit for each x in Q in a deterministic order. Throws
// EnumerationCapExceeded when more than cap points exist.
void for_each_point(const DomainSpec& dom,
                    const std::function<void(const BinaryVector&)>& visit,
                    std::size_t cap = default_enumeration_cap());
std::vector<BinaryVector> enumerate(const DomainSpec& dom,
                                    std::size_t cap = default_enumeration_cap());

// Feasible auxiliary values for a fixed x, or nullopt when x is not in Q.
std::optional<std::vector<double>> complete_aux(const DomainSpec& dom,
                                                const BinaryVector& x);
bool contains(const DomainSpec& dom, const BinaryVector& x);

// For shortest-path domains: the source-to-sink vertex sequence carried by
// the flow variables in a full assignment [x | aux | ...]. Empty when no
// flow reaches the sink.
std::vector<int> extract_path(const DomainSpec& dom,
                              const std::vector<double>& values);

}  // namespace owa

#endif  // OWA_DOMAINS_HPP_
