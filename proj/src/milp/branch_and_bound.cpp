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

#include "owa/milp/branch_and_bound.hpp"

#include <chrono>
#include <cmath>
#include <queue>

#include "owa/errors.hpp"

namespace owa::milp {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kTimeLimit:
      return "time-limit";
    case SolveStatus::kInfeasible:
      return "infeasible";
  }
  return "?";
}

double relative_gap_percent(double incumbent, double bound) {
  if (!std::isfinite(incumbent) || incumbent <= 0.0)
    return std::numeric_limits<double>::quiet_NaN();
  return 100.0 * (incumbent - bound) / incumbent;
}

namespace {

struct Node {
  double key;  // LP value of the parent, a valid lower bound
  int depth;
  long order;
  std::vector<double> lower;
  std::vector<double> upper;
};

struct NodeLess {
  // std::priority_queue pops the "largest"; invert for best-bound first.
  bool operator()(const Node& a, const Node& b) const {
    if (a.key != b.key) return a.key > b.key;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.order > b.order;
  }
};

class Pruner {
 public:
  explicit Pruner(double step) : step_(step) {}

  // True when no solution below `incumbent` can lie under a node whose LP
  // value is `bound`.
  bool dominated(double bound, double incumbent) const {
    if (!std::isfinite(incumbent)) return false;
    const double slack = 1e-9 * std::max(1.0, std::fabs(incumbent));
    if (step_ > 0.0) {
      const double rounded = step_ * std::ceil(bound / step_ - 1e-6);
      return rounded >= incumbent - slack;
    }
    return bound >= incumbent - std::max(1e-6, slack);
  }

 private:
  double step_;
};

}  // namespace

SolveReport branch_and_bound(const Model& model, const BnbOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  SolveReport report;
  const int n = model.num_variables();
  std::vector<int> binaries;
  Node root{-std::numeric_limits<double>::infinity(), 0, 0, {}, {}};
  for (int j = 0; j < n; ++j) {
    const auto& v = model.variables()[j];
    root.lower.push_back(v.lower);
    root.upper.push_back(v.upper);
    if (v.kind == VarKind::kBinary) {
      binaries.push_back(j);
      root.lower[j] = std::max(root.lower[j], 0.0);
      root.upper[j] = std::min(root.upper[j], 1.0);
    }
  }

  const Pruner pruner(model.objective_step());
  std::priority_queue<Node, std::vector<Node>, NodeLess> open;
  open.push(std::move(root));
  long created = 1;
  bool limit_hit = false;
  double incumbent = std::numeric_limits<double>::infinity();

  auto notify = [&](const Node& node, NodeOutcome outcome, double lp_value) {
    if (!options.observer) return;
    NodeEvent ev;
    ev.id = report.node_count;
    ev.depth = node.depth;
    ev.outcome = outcome;
    ev.lp_value = lp_value;
    ev.global_bound = node.key;
    ev.incumbent = incumbent;
    ev.lower = node.lower;
    ev.upper = node.upper;
    options.observer(ev);
  };

  while (!open.empty()) {
    if (elapsed() > options.time_limit_s ||
        (options.node_limit >= 0 && report.node_count >= options.node_limit)) {
      limit_hit = true;
      break;
    }
    Node node = open.top();
    open.pop();
    if (pruner.dominated(node.key, incumbent)) continue;
    ++report.node_count;

    LpSolution lp = lp_solve(model, node.lower, node.upper, options.lp);
    report.lp_iterations += lp.iterations;
    if (lp.status == LpStatus::kUnbounded)
      throw Error("LP relaxation is unbounded");
    if (lp.status == LpStatus::kIterationLimit)
      throw Error("LP iteration limit reached");
    if (node.depth == 0 && report.node_count == 1 &&
        lp.status == LpStatus::kOptimal)
      report.root_lp_value = lp.objective;
    if (lp.status == LpStatus::kInfeasible) {
      notify(node, NodeOutcome::kInfeasible, 0.0);
      continue;
    }
    if (pruner.dominated(lp.objective, incumbent)) {
      notify(node, NodeOutcome::kPruned, lp.objective);
      continue;
    }

    int branch_var = -1;
    double best_frac = options.integrality_tol;
    for (int j : binaries) {
      const double v = lp.values[j];
      const double frac = std::fabs(v - std::round(v));
      if (frac > best_frac) {
        best_frac = frac;
        branch_var = j;
      }
    }

    if (branch_var < 0) {
      // Re-solve with binaries pinned so continuous values are consistent.
      std::vector<double> lo = node.lower, up = node.upper;
      for (int j : binaries) lo[j] = up[j] = std::round(lp.values[j]);
      LpSolution fixed = lp_solve(model, lo, up, options.lp);
      report.lp_iterations += fixed.iterations;
      if (fixed.status != LpStatus::kOptimal) fixed = lp;
      for (int j : binaries) fixed.values[j] = std::round(lp.values[j]);
      const double value = model.objective_value(fixed.values);
      if (value < incumbent) {
        incumbent = value;
        report.has_incumbent = true;
        report.values = std::move(fixed.values);
        report.objective = value;
      }
      notify(node, NodeOutcome::kIntegral, lp.objective);
      continue;
    }

    notify(node, NodeOutcome::kBranched, lp.objective);
    Node down{lp.objective, node.depth + 1, created++, node.lower, node.upper};
    down.upper[branch_var] = 0.0;
    Node upn{lp.objective, node.depth + 1, created++, std::move(node.lower),
             std::move(node.upper)};
    upn.lower[branch_var] = 1.0;
    open.push(std::move(down));
    open.push(std::move(upn));
  }

  report.wall_seconds = elapsed();
  if (limit_hit) {
    report.status = SolveStatus::kTimeLimit;
    double bound = report.has_incumbent ? incumbent
                                        : std::numeric_limits<double>::infinity();
    while (!open.empty()) {
      if (!pruner.dominated(open.top().key, incumbent))
        bound = std::min(bound, open.top().key);
      open.pop();
    }
    report.bound = bound;
  } else if (report.has_incumbent) {
    report.status = SolveStatus::kOptimal;
    report.bound = incumbent;
  } else {
    report.status = SolveStatus::kInfeasible;
  }
  if (report.has_incumbent) {
    report.gap_lr = relative_gap_percent(incumbent, report.root_lp_value);
    report.gap = report.status == SolveStatus::kOptimal
                     ? 0.0
                     : relative_gap_percent(incumbent, report.bound);
  }
  return report;
}

}  // namespace owa::milp
