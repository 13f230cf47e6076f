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

#include "owa/domains.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "owa/errors.hpp"
#include "owa/milp/lp.hpp"

namespace owa {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), adjacency_(vertex_count + 1) {
  if (vertex_count < 1) throw InvariantError("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v) throw InvariantError("self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > vertex_count || v > vertex_count)
      throw InvariantError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw InvariantError("duplicate edge {" + std::to_string(u) + "," +
                           std::to_string(v) + "}");
    const int e = static_cast<int>(edges_.size());
    edges_.push_back({u, v});
    adjacency_[u].push_back({v, e});
    adjacency_[v].push_back({u, e});
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

int Graph::find_edge(int u, int v) const {
  if (u < 1 || u > vertex_count_) return -1;
  for (const auto& [w, e] : adjacency_[u]) {
    if (w == v) return e;
  }
  return -1;
}

Graph Graph::without_vertex(int v) const {
  if (v < 1 || v > vertex_count_) throw InvariantError("no such vertex");
  auto shift = [v](int w) { return w > v ? w - 1 : w; };
  std::vector<std::pair<int, int>> kept;
  for (const auto& [a, b] : edges_) {
    if (a != v && b != v) kept.push_back({shift(a), shift(b)});
  }
  Graph g(vertex_count_ - 1, std::move(kept));
  if (!coords.empty()) {
    for (int w = 1; w <= vertex_count_; ++w) {
      if (w != v) g.coords.push_back(coords[w - 1]);
    }
  }
  return g;
}

const char* to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::kExplicitCardinality:
      return "explicit-cardinality";
    case DomainKind::kExplicitPoints:
      return "explicit-points";
    case DomainKind::kShortestPath:
      return "shortest-path";
    case DomainKind::kPerfectMatching:
      return "perfect-matching";
  }
  return "?";
}

namespace {

milp::Constraint make_row(std::vector<milp::Term> terms, milp::Sense sense,
                          double rhs, std::string tag, std::string name,
                          std::vector<int> index) {
  milp::Constraint row;
  std::sort(terms.begin(), terms.end(),
            [](const milp::Term& a, const milp::Term& b) { return a.var < b.var; });
  row.terms = std::move(terms);
  row.sense = sense;
  row.rhs = rhs;
  row.tag = std::move(tag);
  row.name = std::move(name);
  row.index = std::move(index);
  return row;
}

std::vector<std::string> edge_names(const Graph& g) {
  std::vector<std::string> names;
  for (const auto& [u, v] : g.edges())
    names.push_back("x_" + std::to_string(u) + "_" + std::to_string(v));
  return names;
}

}  // namespace

DomainSpec explicit_cardinality_domain(int n, int k) {
  if (n < 1) throw InvariantError("cardinality domain needs n >= 1");
  if (k < 0 || k > n)
    throw InvariantError("cardinality k=" + std::to_string(k) +
                         " outside [0, n=" + std::to_string(n) + "]");
  DomainSpec dom;
  dom.kind = DomainKind::kExplicitCardinality;
  dom.n_design = n;
  dom.cardinality = k;
  std::vector<milp::Term> terms;
  for (int j = 0; j < n; ++j) {
    dom.design_names.push_back("x" + std::to_string(j + 1));
    terms.push_back({j, 1.0});
  }
  dom.constraints.push_back(make_row(std::move(terms), milp::Sense::kEqual, k,
                                     "card", "card", {}));
  return dom;
}

DomainSpec explicit_points_domain(std::vector<BinaryVector> points) {
  if (points.empty()) throw InvariantError("explicit domain needs a point");
  const int n = static_cast<int>(points.front().size());
  if (n < 1) throw InvariantError("explicit domain needs n >= 1");
  std::set<BinaryVector> unique;
  for (const auto& pt : points) {
    if (static_cast<int>(pt.size()) != n)
      throw DimensionError("explicit points differ in length");
    for (auto b : pt) {
      if (b > 1) throw InvariantError("explicit point is not binary");
    }
    if (!unique.insert(pt).second)
      throw InvariantError("duplicate explicit point");
  }
  DomainSpec dom;
  dom.kind = DomainKind::kExplicitPoints;
  dom.n_design = n;
  dom.aux_count = static_cast<int>(points.size());
  for (int j = 0; j < n; ++j) dom.design_names.push_back("x" + std::to_string(j + 1));
  for (int k = 0; k < dom.aux_count; ++k) {
    dom.aux_names.push_back("lambda" + std::to_string(k + 1));
    dom.aux_lower.push_back(0.0);
    dom.aux_upper.push_back(1.0);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<milp::Term> terms{{j, 1.0}};
    for (int k = 0; k < dom.aux_count; ++k) {
      if (points[k][j]) terms.push_back({n + k, -1.0});
    }
    dom.constraints.push_back(make_row(std::move(terms), milp::Sense::kEqual, 0.0,
                                       "hull", "hull_" + std::to_string(j + 1),
                                       {j}));
  }
  std::vector<milp::Term> sum;
  for (int k = 0; k < dom.aux_count; ++k) sum.push_back({n + k, 1.0});
  dom.constraints.push_back(
      make_row(std::move(sum), milp::Sense::kEqual, 1.0, "hull_sum", "hull_sum", {}));
  dom.points = std::move(points);
  return dom;
}

DomainSpec shortest_path_domain(const Graph& g, int source, int sink) {
  if (source == sink) throw InvariantError("source and sink must differ");
  if (source < 1 || sink < 1 || source > g.vertex_count() ||
      sink > g.vertex_count())
    throw InvariantError("source or sink not in graph");
  if (g.edge_count() < 1) throw InvariantError("shortest path needs an edge");
  DomainSpec dom;
  dom.kind = DomainKind::kShortestPath;
  dom.graph = g;
  dom.source = source;
  dom.sink = sink;
  dom.n_design = g.edge_count();
  dom.design_names = edge_names(g);
  dom.aux_count = 2 * g.edge_count();
  const int n = dom.n_design;
  for (const auto& [u, v] : g.edges()) {
    dom.aux_names.push_back("phi_" + std::to_string(u) + "_" + std::to_string(v));
    dom.aux_names.push_back("phi_" + std::to_string(v) + "_" + std::to_string(u));
    for (int k = 0; k < 2; ++k) {
      dom.aux_lower.push_back(0.0);
      dom.aux_upper.push_back(1.0);
    }
  }
  for (int u = 1; u <= g.vertex_count(); ++u) {
    std::vector<milp::Term> terms;
    for (const auto& [w, e] : g.neighbors(u)) {
      const bool forward = g.edges()[e].first == u;
      // Arc 2e runs from the smaller endpoint to the larger one.
      terms.push_back({n + 2 * e + (forward ? 0 : 1), 1.0});
      terms.push_back({n + 2 * e + (forward ? 1 : 0), -1.0});
    }
    const char* tag = u == source ? "SPPb" : u == sink ? "SPPc" : "SPPd";
    const double rhs = u == source ? 1.0 : u == sink ? -1.0 : 0.0;
    dom.constraints.push_back(make_row(std::move(terms), milp::Sense::kEqual, rhs,
                                       tag, std::string(tag) + "_" + std::to_string(u),
                                       {u - 1}));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges()[e];
    dom.constraints.push_back(make_row(
        {{e, -1.0}, {n + 2 * e, 1.0}, {n + 2 * e + 1, 1.0}}, milp::Sense::kLessEqual,
        0.0, "SPPe", "SPPe_" + std::to_string(u) + "_" + std::to_string(v), {e}));
  }
  return dom;
}

DomainSpec perfect_matching_domain(const Graph& g) {
  if (g.vertex_count() % 2 != 0)
    throw InvariantError("perfect matching needs an even vertex count, got " +
                         std::to_string(g.vertex_count()));
  DomainSpec dom;
  dom.kind = DomainKind::kPerfectMatching;
  dom.graph = g;
  dom.n_design = g.edge_count();
  dom.design_names = edge_names(g);
  for (int u = 1; u <= g.vertex_count(); ++u) {
    std::vector<milp::Term> terms;
    for (const auto& [w, e] : g.neighbors(u)) terms.push_back({e, 1.0});
    dom.constraints.push_back(make_row(std::move(terms), milp::Sense::kEqual, 1.0,
                                       "PM1", "PM1_" + std::to_string(u), {u - 1}));
  }
  return dom;
}

std::size_t default_enumeration_cap() {
  if (const char* env = std::getenv("OWA_ENUM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

namespace {

class Emitter {
 public:
  Emitter(const std::function<void(const BinaryVector&)>& visit, std::size_t cap)
      : visit_(visit), cap_(cap) {}
  void operator()(const BinaryVector& x) {
    if (++count_ > cap_) throw EnumerationCapExceeded(cap_);
    visit_(x);
  }

 private:
  const std::function<void(const BinaryVector&)>& visit_;
  std::size_t cap_;
  std::size_t count_ = 0;
};

void combinations(int n, int k, int start, BinaryVector& x, Emitter& emit) {
  if (k == 0) {
    emit(x);
    return;
  }
  for (int j = start; j <= n - k; ++j) {
    x[j] = 1;
    combinations(n, k - 1, j + 1, x, emit);
    x[j] = 0;
  }
}

void simple_paths(const Graph& g, int u, int sink, std::vector<char>& visited,
                  BinaryVector& x, Emitter& emit) {
  if (u == sink) {
    emit(x);
    return;
  }
  for (const auto& [w, e] : g.neighbors(u)) {
    if (visited[w]) continue;
    visited[w] = 1;
    x[e] = 1;
    simple_paths(g, w, sink, visited, x, emit);
    x[e] = 0;
    visited[w] = 0;
  }
}

void matchings(const Graph& g, std::vector<char>& matched, BinaryVector& x,
               Emitter& emit) {
  int u = 1;
  while (u <= g.vertex_count() && matched[u]) ++u;
  if (u > g.vertex_count()) {
    emit(x);
    return;
  }
  matched[u] = 1;
  for (const auto& [w, e] : g.neighbors(u)) {
    if (matched[w]) continue;
    matched[w] = 1;
    x[e] = 1;
    matchings(g, matched, x, emit);
    x[e] = 0;
    matched[w] = 0;
  }
  matched[u] = 0;
}

}  // namespace

void for_each_point(const DomainSpec& dom,
                    const std::function<void(const BinaryVector&)>& visit,
                    std::size_t cap) {
  Emitter emit(visit, cap);
  BinaryVector x(dom.n_design, 0);
  switch (dom.kind) {
    case DomainKind::kExplicitCardinality:
      combinations(dom.n_design, dom.cardinality, 0, x, emit);
      break;
    case DomainKind::kExplicitPoints:
      for (const auto& pt : dom.points) emit(pt);
      break;
    case DomainKind::kShortestPath: {
      std::vector<char> visited(dom.graph.vertex_count() + 1, 0);
      visited[dom.source] = 1;
      simple_paths(dom.graph, dom.source, dom.sink, visited, x, emit);
      break;
    }
    case DomainKind::kPerfectMatching: {
      std::vector<char> matched(dom.graph.vertex_count() + 1, 0);
      matchings(dom.graph, matched, x, emit);
      break;
    }
  }
}

std::vector<BinaryVector> enumerate(const DomainSpec& dom, std::size_t cap) {
  std::vector<BinaryVector> out;
  for_each_point(dom, [&](const BinaryVector& x) { out.push_back(x); }, cap);
  return out;
}

std::optional<std::vector<double>> complete_aux(const DomainSpec& dom,
                                                const BinaryVector& x) {
  if (static_cast<int>(x.size()) != dom.n_design)
    throw DimensionError("design vector length differs from domain");
  for (auto b : x) {
    if (b > 1) return std::nullopt;
  }
  if (dom.aux_count == 0) {
    std::vector<double> values(x.begin(), x.end());
    for (const auto& row : dom.constraints) {
      if (row.violation(values) > 1e-9) return std::nullopt;
    }
    return std::vector<double>{};
  }
  milp::Model model;
  for (int j = 0; j < dom.n_design; ++j)
    model.add_variable(dom.design_names[j], milp::VarKind::kContinuous, x[j], x[j]);
  for (int k = 0; k < dom.aux_count; ++k)
    model.add_variable(dom.aux_names[k], milp::VarKind::kContinuous,
                       dom.aux_lower[k], dom.aux_upper[k]);
  for (const auto& row : dom.constraints) model.add_constraint(row);
  const auto sol = milp::lp_solve(model);
  if (sol.status != milp::LpStatus::kOptimal) return std::nullopt;
  if (model.max_violation(sol.values) > 1e-6) return std::nullopt;
  return std::vector<double>(sol.values.begin() + dom.n_design, sol.values.end());
}

bool contains(const DomainSpec& dom, const BinaryVector& x) {
  return complete_aux(dom, x).has_value();
}

std::vector<int> extract_path(const DomainSpec& dom,
                              const std::vector<double>& values) {
  if (dom.kind != DomainKind::kShortestPath)
    throw InvariantError("path extraction needs a shortest-path domain");
  const Graph& g = dom.graph;
  if (static_cast<int>(values.size()) < dom.n_design + dom.aux_count)
    throw DimensionError("assignment too short for flow variables");
  std::vector<int> parent(g.vertex_count() + 1, 0);
  std::deque<int> queue{dom.source};
  parent[dom.source] = dom.source;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == dom.sink) break;
    for (const auto& [w, e] : g.neighbors(u)) {
      const bool forward = g.edges()[e].first == u;
      const double flow = values[dom.n_design + 2 * e + (forward ? 0 : 1)];
      if (flow > 1e-6 && parent[w] == 0) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (parent[dom.sink] == 0) return {};
  std::vector<int> path{dom.sink};
  while (path.back() != dom.source) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace owa
