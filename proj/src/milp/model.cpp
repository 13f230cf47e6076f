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

#include "owa/milp/model.hpp"

#include <algorithm>
#include <cmath>

#include "owa/errors.hpp"

namespace owa::milp {

const char* sense_symbol(Sense sense) {
  switch (sense) {
    case Sense::kLessEqual:
      return "<=";
    case Sense::kEqual:
      return "=";
    case Sense::kGreaterEqual:
      return ">=";
  }
  return "?";
}

LinExpr LinExpr::var(int index, double coef) {
  LinExpr e;
  e.add(index, coef);
  return e;
}

LinExpr& LinExpr::add(int var, double coef) {
  if (coef != 0.0) raw_.push_back({var, coef});
  return *this;
}

LinExpr& LinExpr::add(const LinExpr& other, double scale) {
  for (const auto& t : other.raw_) add(t.var, t.coef * scale);
  constant_ += other.constant_ * scale;
  return *this;
}

std::vector<Term> LinExpr::terms() const {
  std::vector<Term> sorted = raw_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (const auto& t : sorted) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  return merged;
}

double LinExpr::evaluate(std::span<const double> values) const {
  double v = constant_;
  for (const auto& t : raw_) v += t.coef * values[t.var];
  return v;
}

double Constraint::activity(std::span<const double> values) const {
  double a = 0.0;
  for (const auto& t : terms) a += t.coef * values[t.var];
  return a;
}

double Constraint::violation(std::span<const double> values) const {
  const double a = activity(values);
  switch (sense) {
    case Sense::kLessEqual:
      return a - rhs;
    case Sense::kGreaterEqual:
      return rhs - a;
    case Sense::kEqual:
      return std::fabs(a - rhs);
  }
  return 0.0;
}

int Model::add_variable(std::string name, VarKind kind, double lower,
                        double upper) {
  if (lower > upper) throw Error("variable " + name + " has empty domain");
  variables_.push_back({std::move(name), kind, lower, upper});
  return static_cast<int>(variables_.size()) - 1;
}

void Model::add_row(const LinExpr& lhs, Sense sense, const LinExpr& rhs,
                    std::string tag, std::string name, std::vector<int> index) {
  LinExpr diff = lhs;
  diff.add(rhs, -1.0);
  Constraint row;
  row.terms = diff.terms();
  row.sense = sense;
  row.rhs = -diff.constant();
  row.tag = std::move(tag);
  row.name = std::move(name);
  row.index = std::move(index);
  add_constraint(std::move(row));
}

void Model::add_constraint(Constraint row) {
  for (const auto& t : row.terms) {
    if (t.var < 0 || t.var >= num_variables())
      throw Error("constraint " + row.name + " references unknown variable");
  }
  constraints_.push_back(std::move(row));
}

void Model::set_objective(const LinExpr& objective) {
  objective_ = objective.terms();
  objective_constant_ = objective.constant();
}

void Model::set_bounds(int var, double lower, double upper) {
  if (lower > upper) throw Error("empty bound interval");
  variables_.at(var).lower = lower;
  variables_.at(var).upper = upper;
}

int Model::remove_rows_with_tag(const std::string& tag) {
  const auto before = constraints_.size();
  std::erase_if(constraints_,
                [&](const Constraint& c) { return c.tag == tag; });
  return static_cast<int>(before - constraints_.size());
}

double Model::objective_value(std::span<const double> values) const {
  double v = objective_constant_;
  for (const auto& t : objective_) v += t.coef * values[t.var];
  return v;
}

double Model::max_violation(std::span<const double> values) const {
  double worst = 0.0;
  for (int j = 0; j < num_variables(); ++j) {
    const auto& var = variables_[j];
    worst = std::max({worst, var.lower - values[j], values[j] - var.upper});
    if (var.kind == VarKind::kBinary)
      worst = std::max(worst, std::fabs(values[j] - std::round(values[j])));
  }
  for (const auto& row : constraints_)
    worst = std::max(worst, row.violation(values));
  return worst;
}

bool Model::is_feasible(std::span<const double> values, double tol) const {
  return static_cast<int>(values.size()) == num_variables() &&
         max_violation(values) <= tol;
}

}  // namespace owa::milp
