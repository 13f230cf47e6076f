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

#ifndef OWA_MILP_MODEL_HPP_
#define OWA_MILP_MODEL_HPP_

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace owa::milp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarKind { kContinuous, kBinary };
enum class Sense { kLessEqual, kEqual, kGreaterEqual };

const char* sense_symbol(Sense sense);

struct Variable {
  std::string name;
  VarKind kind = VarKind::kContinuous;
  double lower = 0.0;
  double upper = kInf;
};

struct Term {
  int var = 0;
  double coef = 0.0;
  friend bool operator==(const Term&, const Term&) = default;
};

// Affine expression sum(coef * var) + constant.
class LinExpr {
 public:
  LinExpr() = default;
  explicit LinExpr(double constant) : constant_(constant) {}
  static LinExpr var(int index, double coef = 1.0);

  LinExpr& add(int var, double coef);
  LinExpr& add(const LinExpr& other, double scale = 1.0);
  LinExpr& add_constant(double value) {
    constant_ += value;
    return *this;
  }

  // Sorted by variable, duplicates merged, zeros dropped.
  std::vector<Term> terms() const;
  double constant() const { return constant_; }
  double evaluate(std::span<const double> values) const;

 private:
  std::vector<Term> raw_;
  double constant_ = 0.0;
};

struct Constraint {
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  // Constraint family label, e.g. "owab", "owad'", "SPPe", "cotai_inf.1".
  std::string tag;
  std::string name;
  // Family-specific indices (0-based), e.g. {i, j} for owad0.
  std::vector<int> index;

  double activity(std::span<const double> values) const;
  // Signed violation, positive when the row is violated.
  double violation(std::span<const double> values) const;
};

class Model {
 public:
  int add_variable(std::string name, VarKind kind, double lower, double upper);
  // Emits lhs (sense) rhs after moving everything to the left-hand side.
  void add_row(const LinExpr& lhs, Sense sense, const LinExpr& rhs,
               std::string tag, std::string name, std::vector<int> index = {});
  void add_constraint(Constraint row);
  void set_objective(const LinExpr& objective);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Term>& objective() const { return objective_; }
  double objective_constant() const { return objective_constant_; }

  void set_bounds(int var, double lower, double upper);
  // Removes every constraint carrying `tag`; returns how many were removed.
  int remove_rows_with_tag(const std::string& tag);

  // When positive, every integer-feasible objective value of interest is a
  // multiple of this step (enables bound rounding in branch-and-bound).
  double objective_step() const { return objective_step_; }
  void set_objective_step(double step) { objective_step_ = step; }

  double objective_value(std::span<const double> values) const;
  // Largest bound or row violation of a full assignment.
  double max_violation(std::span<const double> values) const;
  bool is_feasible(std::span<const double> values, double tol = 1e-6) const;

  std::string name;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<Term> objective_;
  double objective_constant_ = 0.0;
  double objective_step_ = 0.0;
};

}  // namespace owa::milp

#endif  // OWA_MILP_MODEL_HPP_
