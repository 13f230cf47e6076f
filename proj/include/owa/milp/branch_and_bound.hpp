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

#ifndef OWA_MILP_BRANCH_AND_BOUND_HPP_
#define OWA_MILP_BRANCH_AND_BOUND_HPP_

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "owa/milp/lp.hpp"
#include "owa/milp/model.hpp"

namespace owa::milp {

enum class SolveStatus { kOptimal, kTimeLimit, kInfeasible };

const char* to_string(SolveStatus status);

enum class NodeOutcome { kInfeasible, kPruned, kIntegral, kBranched };

// Passed to the observer once per processed node.
struct NodeEvent {
  long id = 0;
  int depth = 0;
  NodeOutcome outcome = NodeOutcome::kBranched;
  double lp_value = 0.0;  // meaningful unless outcome is kInfeasible
  double global_bound = 0.0;
  double incumbent = std::numeric_limits<double>::infinity();
  std::span<const double> lower;
  std::span<const double> upper;
};

struct BnbOptions {
  double time_limit_s = 600.0;
  long node_limit = -1;  // negative: unlimited
  double integrality_tol = 1e-6;
  LpOptions lp;
  std::function<void(const NodeEvent&)> observer;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kInfeasible;
  bool has_incumbent = false;
  std::vector<double> values;
  double objective = std::numeric_limits<double>::infinity();
  double bound = -std::numeric_limits<double>::infinity();
  long node_count = 0;
  long lp_iterations = 0;
  double root_lp_value = std::numeric_limits<double>::quiet_NaN();
  // NaN when undefined (no incumbent, or incumbent not positive).
  double gap_lr = std::numeric_limits<double>::quiet_NaN();
  double gap = std::numeric_limits<double>::quiet_NaN();
  double wall_seconds = 0.0;
};

// Relative gap in percent, 100 (incumbent - bound) / incumbent, or NaN when
// the incumbent is not positive.
double relative_gap_percent(double incumbent, double bound);

SolveReport branch_and_bound(const Model& model, const BnbOptions& options = {});

}  // namespace owa::milp

#endif  // OWA_MILP_BRANCH_AND_BOUND_HPP_
