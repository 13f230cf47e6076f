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

#ifndef OWA_FORMULATIONS_HPP_
#define OWA_FORMULATIONS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "owa/core.hpp"
#include "owa/domains.hpp"
#include "owa/milp/model.hpp"

namespace owa {

enum class Family { kZ, kZY, kS, kGS };
// kBase0/kBase/kR1/kR2/kR3 for Z, ZY and S (S has no kBase0);
// kBase and kGSPrime for GS.
enum class Flavor { kBase0, kBase, kR1, kR2, kR3, kGSPrime };

struct FormulationVariant {
  Family family = Family::kZ;
  Flavor flavor = Flavor::kBase;
  bool reduced_first_column = false;

  // Short identifier: Fz0 Fz FzR1 FzR2 FzR3 Fzy0 Fzy FzyR1 FzyR2 FzyR3
  // Fs FsR1 FsR2 FsR3 FGS FGSp, with a "+red" suffix for reduced builds.
  std::string name() const;
  // Accepts name() output plus the aliases Fz' and Fzy' for the reduced
  // builds of Fz and Fzy. Throws Error on unknown names.
  static FormulationVariant parse(const std::string& text);

  bool is_cataloged() const;
  bool supports_reduction() const;
  bool has_y() const { return family == Family::kZY || family == Family::kGS; }
  bool uses_s() const { return family == Family::kS; }
  // Flavors that keep the exact permutation and ordering rows.
  bool keeps_ordering() const;

  friend bool operator==(const FormulationVariant&,
                         const FormulationVariant&) = default;
};

// The 16 cataloged variants in a fixed order.
const std::vector<FormulationVariant>& all_variants();

struct BuildOptions {
  // Emits the theta upper-bound rows (tag "cotazy") and accepts signed weights.
  bool signed_extension = false;
};

// A built model plus the index maps back to the OWA objects.
class OwaModel {
 public:
  milp::Model model;
  FormulationVariant variant;
  Rational big_m;
  CostMatrix costs;
  WeightVector weights;
  int p = 0;
  int n_design = 0;
  int aux_count = 0;
  // Variable index of z_ij (Z, ZY, GS) or s_ij (S), row-major, -1 when the
  // first column was eliminated.
  std::vector<int> perm_vars;
  std::vector<int> y_vars;      // row-major, empty unless has_y()
  std::vector<int> theta_vars;  // one per position

  int x_var(int e) const { return e; }
  int aux_var(int k) const { return n_design + k; }
  int perm_var(int i, int j) const { return perm_vars[std::size_t(i) * p + j]; }
  int y_var(int i, int j) const { return y_vars[std::size_t(i) * p + j]; }

  // Affine expressions valid in every family.
  milp::LinExpr z_expr(int i, int j) const;
  milp::LinExpr s_expr(int i, int j) const;
  // sum_{k >= j} z_ik
  milp::LinExpr z_tail_expr(int i, int j) const;
  milp::LinExpr theta_expr(int j) const;
  milp::LinExpr outcome_expr(int i) const;  // C^i x
};

// Throws Error on an uncataloged variant, on M not strictly above every
// attainable C^i x, or on signed weights without the signed extension (which
// additionally needs a flavor that keeps ordering).
OwaModel build(const FormulationVariant& variant, const DomainSpec& dom,
               const CostMatrix& c, const WeightVector& omega,
               const Rational& big_m, const BuildOptions& options = {});

// 1 + max_i of the LP maximum of C^i x over the domain relaxation, rounded up
// to an integer; falls back to 1 + the largest positive row sum when the LP
// fails.
Rational big_m_default(const DomainSpec& dom, const CostMatrix& c);

// Rows of the theta upper-bound family theta_j <= C^i x + M (1 - z_ij).
void add_theta_upper_rows(OwaModel& m);

// Full assignment for x: aux completion, z/s from the canonical sort,
// theta_j = C^{sigma_j} x, y_ij = C^i x on the diagonal of the permutation.
// Throws InvariantError when x is not in Q or the lift is infeasible.
std::vector<double> canonical_lift(const OwaModel& m, const DomainSpec& dom,
                                   const BinaryVector& x);

// Satisfaction of each constraint tag (true when every row of that tag holds
// within tol). The pseudo-tags "bounds" and "integrality" cover the variable
// bounds and the binary restrictions.
std::map<std::string, bool> domain_membership(const OwaModel& m,
                                              const std::vector<double>& point,
                                              double tol = 1e-6);
bool is_member(const OwaModel& m, const std::vector<double>& point,
               double tol = 1e-6);

// Design vector read from a solution by rounding the x variables.
BinaryVector design_of(const OwaModel& m, const std::vector<double>& values);

// Theta values as stored, and the same values sorted non-increasingly for
// display in flavors that drop the ordering rows.
std::vector<double> theta_values(const OwaModel& m,
                                 const std::vector<double>& values);
std::vector<double> theta_display(const OwaModel& m,
                                  const std::vector<double>& values);

}  // namespace owa

#endif  // OWA_FORMULATIONS_HPP_
