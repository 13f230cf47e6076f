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

#include "owa/instances.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "owa/errors.hpp"

namespace owa {

namespace {

constexpr const char* kHeader = "# owa-instance v1";
constexpr const char* kRngId = "mt19937_64";

std::vector<Rational> integers(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ' ';
    out += to_string(values[k]);
  }
  return out;
}

DomainKind parse_kind(const std::string& text, std::size_t line) {
  for (DomainKind k :
       {DomainKind::kExplicitCardinality, DomainKind::kExplicitPoints,
        DomainKind::kShortestPath, DomainKind::kPerfectMatching}) {
    if (text == to_string(k)) return k;
  }
  throw ParseError(line, "unknown domain kind '" + text + "'");
}

std::string decimal(const Rational& value) {
  std::ostringstream out;
  out << to_double(value);
  return out.str();
}

bool graph_kind(DomainKind kind) {
  return kind == DomainKind::kShortestPath ||
         kind == DomainKind::kPerfectMatching;
}

}  // namespace

void GridSpec::validate() const {
  if (side < 2) throw InvariantError("grid side must be at least 2");
  if (p < 2) throw InvariantError("grid instances need p >= 2");
  if (alpha < 0 || alpha > 1) throw InvariantError("alpha must lie in [0,1]");
  if (cost_min < 1 || cost_max < cost_min)
    throw InvariantError("cost range must satisfy 1 <= min <= max");
  if (!graph_kind(kind))
    throw InvariantError("grid instances are shortest-path or perfect-matching");
}

DomainSpec Instance::domain() const {
  switch (kind) {
    case DomainKind::kExplicitCardinality:
      return explicit_cardinality_domain(n, cardinality);
    case DomainKind::kExplicitPoints:
      return explicit_points_domain(points);
    case DomainKind::kShortestPath:
      return shortest_path_domain(graph, source, sink);
    case DomainKind::kPerfectMatching:
      return perfect_matching_domain(graph);
  }
  throw InvariantError("unknown domain kind");
}

Graph grid_graph(int side) {
  if (side < 2) throw InvariantError("grid side must be at least 2");
  auto id = [side](int x, int y) { return (y - 1) * side + x; };
  std::set<std::pair<int, int>> edges;
  auto arc = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  for (int y = 1; y <= side; ++y) {
    for (int x = 1; x <= side; ++x) {
      if (x < side) arc(id(x, y), id(x + 1, y));
      if (y < side) arc(id(x, y), id(x, y + 1));
      if (y > 1) arc(id(x, y), id(x, y - 1));
      if (x < side && y > 1) arc(id(x, y), id(x + 1, y - 1));
    }
  }
  Graph g(side * side, {edges.begin(), edges.end()});
  for (int v = 1; v <= side * side; ++v)
    g.coords.push_back({(v - 1) % side + 1, (v - 1) / side + 1});
  return g;
}

Instance generate_grid(const GridSpec& spec) {
  spec.validate();
  Instance inst;
  inst.kind = spec.kind;
  inst.graph = grid_graph(spec.side);
  const int full = inst.graph.vertex_count();
  if (spec.kind == DomainKind::kPerfectMatching && full % 2 == 1)
    inst.graph = inst.graph.without_vertex(full);
  if (spec.kind == DomainKind::kShortestPath) {
    inst.source = 1;
    inst.sink = full;
  }
  const int n = inst.graph.edge_count();
  inst.n = n;
  std::mt19937_64 rng(spec.seed);
  const auto span = static_cast<std::uint64_t>(spec.cost_max - spec.cost_min + 1);
  std::vector<Rational> entries(std::size_t(spec.p) * n);
  for (int e = 0; e < n; ++e) {
    for (int i = 0; i < spec.p; ++i)
      entries[std::size_t(i) * n + e] = Rational(spec.cost_min + static_cast<int>(rng() % span));
  }
  inst.costs = CostMatrix(spec.p, n, std::move(entries));
  inst.weights = hurwicz_weights(spec.alpha, spec.p);
  const char* tag = spec.kind == DomainKind::kShortestPath ? "spp" : "pmp";
  inst.name = std::string("grid-") + tag + "-s" + std::to_string(spec.side) +
              "-p" + std::to_string(spec.p) + "-a" + decimal(spec.alpha) +
              "-seed" + std::to_string(spec.seed);
  inst.provenance = {
      {"generator", "grid"},
      {"side", std::to_string(spec.side)},
      {"p", std::to_string(spec.p)},
      {"alpha", to_string(spec.alpha)},
      {"seed", std::to_string(spec.seed)},
      {"rng", kRngId},
      {"costs", "uniform-integer " + std::to_string(spec.cost_min) + " " +
                    std::to_string(spec.cost_max) + " edge-major"},
      {"arcs", "undirected support; down-diagonal clamped to x < side"},
  };
  if (spec.kind == DomainKind::kPerfectMatching && full % 2 == 1)
    inst.provenance.push_back({"removed-vertex", std::to_string(full)});
  return inst;
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << kHeader << '\n';
  out << "name " << (inst.name.empty() ? "unnamed" : inst.name) << "\n\n";
  out << "[graph]\n";
  out << "vertices " << inst.graph.vertex_count() << '\n';
  const bool coords =
      static_cast<int>(inst.graph.coords.size()) == inst.graph.vertex_count();
  for (int v = 1; coords && v <= inst.graph.vertex_count(); ++v) {
    out << "coord " << v << ' ' << inst.graph.coords[v - 1].first << ' '
        << inst.graph.coords[v - 1].second << '\n';
  }
  for (const auto& [u, v] : inst.graph.edges()) out << "edge " << u << ' ' << v << '\n';
  out << "\n[costs]\n";
  out << "p " << inst.costs.p() << '\n' << "n " << inst.costs.n() << '\n';
  for (int i = 0; i < inst.costs.p(); ++i) {
    const auto row = inst.costs.row(i);
    out << "row " << join_rationals({row.begin(), row.end()}) << '\n';
  }
  out << "\n[weights]\n";
  out << "signed " << (inst.weights.signed_allowed ? 1 : 0) << '\n';
  out << "omega " << join_rationals(inst.weights.omega) << '\n';
  out << "\n[domain]\n";
  out << "kind " << to_string(inst.kind) << '\n';
  switch (inst.kind) {
    case DomainKind::kExplicitCardinality:
      out << "n " << inst.n << '\n' << "cardinality " << inst.cardinality << '\n';
      break;
    case DomainKind::kExplicitPoints:
      out << "n " << inst.n << '\n';
      for (const auto& pt : inst.points) {
        out << "point";
        for (auto b : pt) out << ' ' << int(b);
        out << '\n';
      }
      break;
    case DomainKind::kShortestPath:
      out << "source " << inst.source << '\n' << "sink " << inst.sink << '\n';
      break;
    case DomainKind::kPerfectMatching:
      break;
  }
  out << "\n[provenance]\n";
  for (const auto& [k, v] : inst.provenance) out << k << " = " << v << '\n';
  return out.str();
}

namespace {

class Reader {
 public:
  explicit Reader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines_.push_back({number, line});
    }
  }

  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().first; }

  // Splits the file into sections; lines before the first section go to "".
  std::map<std::string, std::vector<std::pair<std::size_t, std::string>>>
  sections(std::map<std::string, std::size_t>& header_lines) const {
    std::map<std::string, std::vector<std::pair<std::size_t, std::string>>> out;
    std::string current;
    for (const auto& [number, raw] : lines_) {
      std::string line = raw;
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      line = line.substr(first);
      if (line[0] == '#') continue;
      if (line[0] == '[') {
        if (line.back() != ']') throw ParseError(number, "unterminated section header");
        current = line.substr(1, line.size() - 2);
        if (header_lines.count(current))
          throw ParseError(number, "duplicate section [" + current + "]");
        header_lines[current] = number;
        out[current];
        continue;
      }
      out[current].push_back({number, line});
    }
    return out;
  }

  const std::vector<std::pair<std::size_t, std::string>>& lines() const { return lines_; }

 private:
  std::vector<std::pair<std::size_t, std::string>> lines_;
};

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

long parse_int(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + text + "'");
  }
}

Rational parse_value(const std::string& text, std::size_t line) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a rational number, got '" + text + "'");
  }
}

void expect_arity(const std::vector<std::string>& w, std::size_t n,
                  std::size_t line) {
  if (w.size() != n)
    throw ParseError(line, "'" + w[0] + "' takes " + std::to_string(n - 1) +
                               " value(s)");
}

}  // namespace

Instance read_instance(const std::string& text) {
  Reader reader(text);
  const auto& all = reader.lines();
  if (all.empty() || all.front().second != kHeader)
    throw ParseError(1, std::string("missing header '") + kHeader + "'");
  std::map<std::string, std::size_t> header_lines;
  auto sections = reader.sections(header_lines);
  for (const char* required : {"costs", "weights", "domain"}) {
    if (!header_lines.count(required))
      throw ParseError(reader.last_line(),
                       std::string("missing section [") + required + "]");
  }
  for (const auto& [name, line] : header_lines) {
    if (name != "graph" && name != "costs" && name != "weights" &&
        name != "domain" && name != "provenance")
      throw ParseError(line, "unknown section [" + name + "]");
  }

  Instance inst;
  for (const auto& [line, content] : sections[""]) {
    const auto w = words(content);
    if (w[0] != "name") throw ParseError(line, "unexpected '" + w[0] + "' before the first section");
    expect_arity(w, 2, line);
    inst.name = w[1];
  }

  // [graph]
  long vertices = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> coords;
  for (const auto& [line, content] : sections["graph"]) {
    const auto w = words(content);
    if (w[0] == "vertices") {
      expect_arity(w, 2, line);
      vertices = parse_int(w[1], line);
      if (vertices < 0) throw ParseError(line, "negative vertex count");
    } else if (w[0] == "edge") {
      expect_arity(w, 3, line);
      edges.push_back({int(parse_int(w[1], line)), int(parse_int(w[2], line))});
    } else if (w[0] == "coord") {
      expect_arity(w, 4, line);
      if (parse_int(w[1], line) != long(coords.size()) + 1)
        throw ParseError(line, "coordinates must be listed in vertex order");
      coords.push_back({int(parse_int(w[2], line)), int(parse_int(w[3], line))});
    } else {
      throw ParseError(line, "unknown [graph] entry '" + w[0] + "'");
    }
  }
  const bool have_graph = header_lines.count("graph") > 0;
  const std::size_t graph_line = have_graph ? header_lines["graph"] : 1;
  if (!have_graph) vertices = 0;
  if (vertices < 0) throw ParseError(graph_line, "[graph] needs 'vertices'");
  if (vertices > 0) {
    try {
      inst.graph = Graph(int(vertices), edges);
    } catch (const Error& e) {
      throw ParseError(graph_line, e.what());
    }
    if (!coords.empty()) {
      if (long(coords.size()) != vertices)
        throw ParseError(graph_line, "coordinate count differs from vertex count");
      inst.graph.coords = coords;
    }
  } else if (!edges.empty()) {
    throw ParseError(graph_line, "edges given for an empty graph");
  }

  // [costs]
  long p = -1, n = -1;
  std::vector<Rational> entries;
  long rows = 0;
  for (const auto& [line, content] : sections["costs"]) {
    const auto w = words(content);
    if (w[0] == "p" || w[0] == "n") {
      expect_arity(w, 2, line);
      (w[0] == "p" ? p : n) = parse_int(w[1], line);
    } else if (w[0] == "row") {
      if (n < 0) throw ParseError(line, "'n' must precede the cost rows");
      if (long(w.size()) - 1 != n)
        throw ParseError(line, "cost row has " + std::to_string(w.size() - 1) +
                                   " entries, expected " + std::to_string(n));
      for (std::size_t k = 1; k < w.size(); ++k) entries.push_back(parse_value(w[k], line));
      ++rows;
    } else {
      throw ParseError(line, "unknown [costs] entry '" + w[0] + "'");
    }
  }
  const std::size_t costs_line = header_lines["costs"];
  if (p < 1 || n < 1) throw ParseError(costs_line, "[costs] needs positive 'p' and 'n'");
  if (rows != p)
    throw ParseError(costs_line, "expected " + std::to_string(p) + " cost rows, found " +
                                     std::to_string(rows));
  try {
    inst.costs = CostMatrix(int(p), int(n), std::move(entries));
  } catch (const Error& e) {
    throw ParseError(costs_line, e.what());
  }

  // [weights]
  bool signed_allowed = false;
  std::vector<Rational> omega;
  bool have_omega = false;
  for (const auto& [line, content] : sections["weights"]) {
    const auto w = words(content);
    if (w[0] == "signed") {
      expect_arity(w, 2, line);
      signed_allowed = parse_int(w[1], line) != 0;
    } else if (w[0] == "omega") {
      for (std::size_t k = 1; k < w.size(); ++k) omega.push_back(parse_value(w[k], line));
      have_omega = true;
    } else {
      throw ParseError(line, "unknown [weights] entry '" + w[0] + "'");
    }
  }
  const std::size_t weights_line = header_lines["weights"];
  if (!have_omega) throw ParseError(weights_line, "[weights] needs 'omega'");
  if (long(omega.size()) != p)
    throw ParseError(weights_line, "omega has " + std::to_string(omega.size()) +
                                       " entries, expected p = " + std::to_string(p));
  try {
    inst.weights = WeightVector(std::move(omega), signed_allowed);
  } catch (const Error& e) {
    throw ParseError(weights_line, e.what());
  }

  // [domain]
  bool have_kind = false;
  for (const auto& [line, content] : sections["domain"]) {
    const auto w = words(content);
    if (w[0] == "kind") {
      expect_arity(w, 2, line);
      inst.kind = parse_kind(w[1], line);
      have_kind = true;
    } else if (w[0] == "n") {
      expect_arity(w, 2, line);
      inst.n = int(parse_int(w[1], line));
    } else if (w[0] == "cardinality") {
      expect_arity(w, 2, line);
      inst.cardinality = int(parse_int(w[1], line));
    } else if (w[0] == "source" || w[0] == "sink") {
      expect_arity(w, 2, line);
      (w[0] == "source" ? inst.source : inst.sink) = int(parse_int(w[1], line));
    } else if (w[0] == "point") {
      BinaryVector pt;
      for (std::size_t k = 1; k < w.size(); ++k) {
        const long b = parse_int(w[k], line);
        if (b != 0 && b != 1) throw ParseError(line, "point entries must be 0 or 1");
        pt.push_back(static_cast<std::uint8_t>(b));
      }
      inst.points.push_back(std::move(pt));
    } else {
      throw ParseError(line, "unknown [domain] entry '" + w[0] + "'");
    }
  }
  const std::size_t domain_line = header_lines["domain"];
  if (!have_kind) throw ParseError(domain_line, "[domain] needs 'kind'");
  if (graph_kind(inst.kind)) {
    if (inst.graph.vertex_count() == 0)
      throw ParseError(domain_line, "graph domain with an empty [graph]");
    inst.n = inst.graph.edge_count();
  }
  if (inst.n != n)
    throw ParseError(domain_line, "domain dimension " + std::to_string(inst.n) +
                                      " differs from cost columns " + std::to_string(n));

  // [provenance]
  for (const auto& [line, content] : sections["provenance"]) {
    const auto eq = content.find(" = ");
    if (eq == std::string::npos) throw ParseError(line, "provenance lines are 'key = value'");
    inst.provenance.push_back({content.substr(0, eq), content.substr(eq + 3)});
  }

  try {
    (void)inst.domain();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(domain_line, e.what());
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_instance(buf.str());
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write instance file '" + path + "'");
  out << write_instance(inst);
  if (!out) throw Error("failed writing instance file '" + path + "'");
}

bool is_builtin(const std::string& name) {
  return name == "example1" || name == "example2" || name == "example3";
}

Instance builtin_instance(const std::string& name) {
  Instance inst;
  inst.name = name;
  inst.provenance = {{"generator", "builtin"}};
  if (name == "example1" || name == "example2") {
    inst.kind = DomainKind::kExplicitCardinality;
    inst.n = 3;
    inst.cardinality = 2;
    inst.costs = name == "example1"
                     ? CostMatrix(3, 3, integers({1, 4, 1, 1, 1, 3, 5, 1, 2}))
                     : om_as_owa(integers({5, 1, 2}));
    inst.weights = WeightVector(integers({1, 2, 4}));
    return inst;
  }
  if (name == "example3") {
    const std::vector<std::vector<Rational>> d = {
        integers({0, 2, 6}), integers({2, 0, 4}), integers({8, 4, 0})};
    const Rational half{1, 2};
    const std::vector<std::vector<Rational>> gamma = {
        {half, half}, {half, half}, integers({1, 0})};
    inst.kind = DomainKind::kExplicitPoints;
    inst.costs = vaom_as_owa(d, gamma, integers({1, 1, 1}));
    inst.n = inst.costs.n();
    auto point = [](std::initializer_list<int> bits) {
      return BinaryVector(bits.begin(), bits.end());
    };
    inst.points = {
        point({1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0}),
        point({1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 0}),
        point({0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0}),
    };
    inst.weights = WeightVector(integers({0, 1, 2}));
    return inst;
  }
  throw Error("unknown built-in instance '" + name + "'");
}

Instance resolve_instance(const std::string& name_or_path) {
  return is_builtin(name_or_path) ? builtin_instance(name_or_path)
                                  : load_instance(name_or_path);
}

}  // namespace owa
