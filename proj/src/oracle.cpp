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

#include "owa/oracle.hpp"

#include <cmath>
#include <sstream>

#include "owa/errors.hpp"

namespace owa {

OracleResult brute_force_optimum(const DomainSpec& dom, const CostMatrix& c,
                                 const WeightVector& omega, std::size_t cap) {
  if (c.n() != dom.n_design)
    throw DimensionError("cost matrix and domain disagree on n");
  if (omega.size() != c.p()) throw DimensionError("weight vector length != p");
  OracleResult out;
  for_each_point(
      dom,
      [&](const BinaryVector& x) {
        OracleRow row;
        row.x = x;
        row.y = c.outcomes(x);
        row.sorted = sort_outcomes(row.y).sorted;
        row.value = owa_of_outcomes(row.y, omega);
        if (!out.feasible || row.value < out.value ||
            (row.value == out.value && x < out.argmin)) {
          out.feasible = true;
          out.value = row.value;
          out.argmin = x;
        }
        out.table.push_back(std::move(row));
      },
      cap);
  return out;
}

Verdict verify_model(const OwaModel& m, const DomainSpec& dom,
                     const OracleResult& oracle, const VerifyOptions& options) {
  Verdict v;
  v.oracle_feasible = oracle.feasible;
  v.oracle_value = oracle.value;
  v.report = milp::branch_and_bound(m.model, options.bnb);
  const auto& r = v.report;
  std::ostringstream why;
  if (!oracle.feasible) {
    v.pass = r.status == milp::SolveStatus::kInfeasible;
    if (!v.pass) why << "oracle infeasible, solver " << milp::to_string(r.status);
    v.reason = why.str();
    return v;
  }
  if (r.status != milp::SolveStatus::kOptimal) {
    why << "solver status " << milp::to_string(r.status);
    v.reason = why.str();
    return v;
  }
  const double target = to_double(oracle.value);
  const double tol = options.tolerance * std::max(1.0, std::fabs(target));
  if (std::fabs(r.objective - target) > tol) {
    why << "solver optimum " << r.objective << " != oracle " << target;
    v.reason = why.str();
    return v;
  }
  const BinaryVector x = design_of(m, r.values);
  if (!contains(dom, x)) {
    v.reason = "solver design vector is not in Q";
    return v;
  }
  const double direct = to_double(evaluate_owa(x, m.costs, m.weights));
  if (std::fabs(direct - target) > tol) {
    why << "direct OWA of the solver design vector is " << direct;
    v.reason = why.str();
    return v;
  }
  v.pass = true;
  return v;
}

Verdict verify_formulation(const DomainSpec& dom, const CostMatrix& c,
                           const WeightVector& omega,
                           const FormulationVariant& variant,
                           const std::vector<CutFamily>& cuts,
                           const VerifyOptions& options) {
  const OracleResult oracle = brute_force_optimum(dom, c, omega);
  if (!oracle.feasible) {
    Verdict v;
    v.report = milp::branch_and_bound(
        build(variant, dom, c, omega, Rational(1), options.build).model,
        options.bnb);
    v.pass = v.report.status == milp::SolveStatus::kInfeasible;
    if (!v.pass) v.reason = "oracle infeasible but solver found a point";
    return v;
  }
  OwaModel m =
      build(variant, dom, c, omega, big_m_default(dom, c), options.build);
  if (!cuts.empty()) {
    const BoundTable bounds =
        compute_bounds(dom, c, omega, options.bound_method);
    for (CutFamily f : cuts) add_cut(m, f, bounds);
  }
  return verify_model(m, dom, oracle, options);
}

namespace {

void tally(TightnessResult& out, const milp::Constraint& row,
           const std::vector<double>& lift, double tol) {
  const double act = row.activity(lift);
  const double scale = std::max(1.0, std::fabs(row.rhs));
  ++out.lifts;
  if (std::fabs(act - row.rhs) <= tol * scale) ++out.tight;
  if (row.violation(lift) > tol * scale) ++out.violated;
}

}  // namespace

TightnessResult tightness_scan(const OwaModel& m, const DomainSpec& dom,
                               const milp::Constraint& row, double tol) {
  TightnessResult out;
  for_each_point(dom, [&](const BinaryVector& x) {
    tally(out, row, canonical_lift(m, dom, x), tol);
  });
  return out;
}

std::vector<TagTightness> tightness_scan_tag(const OwaModel& m,
                                             const DomainSpec& dom,
                                             const std::string& tag,
                                             double tol) {
  std::vector<TagTightness> out;
  std::vector<const milp::Constraint*> rows;
  for (const auto& row : m.model.constraints()) {
    if (row.tag == tag) {
      rows.push_back(&row);
      out.push_back({row.name, {}});
    }
  }
  for_each_point(dom, [&](const BinaryVector& x) {
    const std::vector<double> lift = canonical_lift(m, dom, x);
    for (std::size_t k = 0; k < rows.size(); ++k)
      tally(out[k].result, *rows[k], lift, tol);
  });
  return out;
}

}  // namespace owa
