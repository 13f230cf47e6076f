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

#ifndef OWA_MILP_LP_HPP_
#define OWA_MILP_LP_HPP_

#include <span>
#include <vector>

#include "owa/milp/model.hpp"

namespace owa::milp {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* to_string(LpStatus status);

struct LpOptions {
  double feas_tol = 1e-7;
  double opt_tol = 1e-7;
  double pivot_tol = 1e-9;
  long max_iterations = 200000;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;  // one per model variable
  double objective = 0.0;
  long iterations = 0;
};

// Minimizes the model objective over its continuous relaxation (binaries
// relaxed to their bounds) with a dense bounded-variable primal simplex.
// Deterministic for a fixed input.
LpSolution lp_solve(const Model& model, const LpOptions& options = {});

// Same, with per-variable bound overrides (used by branch-and-bound).
LpSolution lp_solve(const Model& model, std::span<const double> lower,
                    std::span<const double> upper,
                    const LpOptions& options = {});

// Optimizes an arbitrary linear objective over the model's feasible region;
// `maximize` flips the direction. The reported objective is in the caller's
// direction and includes the expression constant.
LpSolution lp_optimize(const Model& model, const LinExpr& objective,
                       bool maximize, std::span<const double> lower,
                       std::span<const double> upper,
                       const LpOptions& options = {});

}  // namespace owa::milp

#endif  // OWA_MILP_LP_HPP_
