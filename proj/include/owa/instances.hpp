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

#ifndef OWA_INSTANCES_HPP_
#define OWA_INSTANCES_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "owa/core.hpp"
#include "owa/domains.hpp"

namespace owa {

// Square grid with side x side vertices; vertex [x,y] has id (y-1)*side + x.
struct GridSpec {
  int side = 3;
  int p = 2;
  Rational alpha{1, 2};
  std::uint64_t seed = 1;
  int cost_min = 1;
  int cost_max = 100;
  DomainKind kind = DomainKind::kShortestPath;

  // Throws InvariantError unless side >= 2, p >= 2, 0 <= alpha <= 1,
  // 1 <= cost_min <= cost_max and kind is a graph domain.
  void validate() const;
};

// Everything needed to rebuild a model, plus where it came from.
struct Instance {
  std::string name;
  DomainKind kind = DomainKind::kExplicitCardinality;
  Graph graph;        // empty for explicit domains
  int source = 0;     // shortest path, 1-based
  int sink = 0;
  int cardinality = 0;                // explicit cardinality
  std::vector<BinaryVector> points;   // explicit points
  int n = 0;                          // design dimension for explicit domains
  CostMatrix costs;
  WeightVector weights;
  std::vector<std::pair<std::string, std::string>> provenance;

  DomainSpec domain() const;
  friend bool operator==(const Instance&, const Instance&) = default;
};

// Undirected support of the forward, up, down and down-diagonal arcs, edges
// sorted by (u, v). Perfect-matching grids with an odd vertex count drop the
// last vertex. Costs are drawn edge-major from std::mt19937_64(seed).
Graph grid_graph(int side);
Instance generate_grid(const GridSpec& spec);

// Text format "# owa-instance v1" with sections [graph] [costs] [weights]
// [domain] [provenance]; [graph] and [provenance] may be omitted. See
// docs/instance-format.md.
std::string write_instance(const Instance& inst);
// Throws ParseError (with a 1-based line number) on malformed input.
Instance read_instance(const std::string& text);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// Built-in worked examples: "example1", "example2", "example3".
bool is_builtin(const std::string& name);
Instance builtin_instance(const std::string& name);
// A built-in name, or a path to an instance file.
Instance resolve_instance(const std::string& name_or_path);

}  // namespace owa

#endif  // OWA_INSTANCES_HPP_
