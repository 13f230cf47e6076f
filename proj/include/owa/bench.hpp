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

#ifndef OWA_BENCH_HPP_
#define OWA_BENCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "owa/cuts.hpp"
#include "owa/formulations.hpp"
#include "owa/instances.hpp"
#include "owa/milp/branch_and_bound.hpp"

namespace owa {

struct SolveConfig {
  FormulationVariant variant;
  std::vector<CutFamily> cuts;
  BoundMethod bound_method = BoundMethod::kLpRelaxation;
  bool eliminate = false;
  double time_limit_s = 600.0;
  long node_limit = -1;
  std::optional<Rational> big_m;  // default: big_m_default
  BuildOptions build;
};

struct SolveOutcome {
  milp::SolveReport report;
  Rational big_m;
  std::vector<Fixing> fixings;
  BinaryVector x;               // empty without an incumbent
  std::vector<double> theta;    // theta by position, empty without an incumbent
  int variables = 0;
  int constraints = 0;
};

// Builds the model described by the config (cuts, optional elimination
// tests seeded by a short probing solve) and runs branch-and-bound.
OwaModel build_configured(const Instance& inst, const SolveConfig& config,
                          std::vector<Fixing>* fixings = nullptr);
SolveOutcome solve_instance(const Instance& inst, const SolveConfig& config);

// Human-readable report; wall time is printed only when timing is set, so
// reports are reproducible byte for byte.
std::string format_report(const Instance& inst, const SolveConfig& config,
                          const SolveOutcome& outcome, bool timing);
std::string report_csv_header(bool timing);
std::string report_csv_row(const Instance& inst, const SolveConfig& config,
                           const SolveOutcome& outcome, bool timing);

// Integers print without a fraction; everything else with 10 significant
// digits.
std::string format_number(double value);

struct BenchSpec {
  std::vector<DomainKind> kinds{DomainKind::kShortestPath};
  std::vector<int> sides{3};
  std::vector<int> ps{3};
  std::vector<Rational> alphas{Rational(2, 5), Rational(3, 5), Rational(4, 5)};
  int seeds = 10;
  std::uint64_t seed_base = 1;
  std::vector<FormulationVariant> variants;
  std::vector<CutFamily> cuts;
  BoundMethod bound_method = BoundMethod::kLpRelaxation;
  double time_limit_s = 600.0;
  long node_limit = -1;
  int workers = 1;
};

// One solve within a bench group.
struct SeedResult {
  bool solved = false;  // status optimal
  bool failed = false;  // runtime error (cap, limit, ...)
  double seconds = 0.0;
  double gap = 0.0;     // percent, meaningful when not solved
  long nodes = 0;
  double gap_lr = 0.0;  // NaN when undefined
};

struct BenchRow {
  DomainKind kind = DomainKind::kShortestPath;
  std::string variant;
  int vertices = 0;
  int p = 0;
  Rational alpha;
  int seeds = 0;
  int solved = 0;
  int failed = 0;
  double t_avg = 0.0;          // unsolved seeds count with the time limit
  bool worst_is_gap = false;
  double worst = 0.0;          // seconds, or percent when worst_is_gap
  double nodes_avg = 0.0;
  double gap_lr_avg = 0.0;     // NaN when no seed defines it
};

// Aggregates one group with the reporting rules of the benchmark tables.
BenchRow aggregate(DomainKind kind, const std::string& variant, int vertices,
                   int p, const Rational& alpha,
                   const std::vector<SeedResult>& results, double time_limit_s);

// Seed of the k-th instance of a group: seed_base + k, for every group.
std::vector<BenchRow> run_bench(const BenchSpec& spec);
std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

}  // namespace owa

#endif  // OWA_BENCH_HPP_
