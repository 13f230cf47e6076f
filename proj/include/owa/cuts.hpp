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

#ifndef OWA_CUTS_HPP_
#define OWA_CUTS_HPP_

#include <string>
#include <vector>

#include "owa/core.hpp"
#include "owa/domains.hpp"
#include "owa/formulations.hpp"

namespace owa {

enum class BoundMethod { kEnumeration, kLpRelaxation };

const char* to_string(BoundMethod method);

// Bounds on the cost functions, overall and conditional on positions.
// Matrices are row-major p x p, indexed (objective i, position j).
struct BoundTable {
  int p = 0;
  BoundMethod method = BoundMethod::kEnumeration;
  std::vector<double> l, u;
  // l_pi[j] / u_pi[j]: the (j+1)-th largest of l / u.
  std::vector<double> l_pi, u_pi;
  // Bounds on C^i x when objective i sits at position j; +inf / -inf when
  // that placement is impossible.
  std::vector<double> L, U;
  // Lower bounds on the OWA objective with z_ij fixed to 1 (L1) or 0 (L0).
  std::vector<double> L1, L0;

  double at(const std::vector<double>& m, int i, int j) const {
    return m[std::size_t(i) * p + j];
  }
  // Finite stand-ins used as cut coefficients.
  double l_cell(int i, int j) const;
  double u_cell(int i, int j) const;
};

BoundTable compute_bounds(const DomainSpec& dom, const CostMatrix& c,
                          const WeightVector& omega, BoundMethod method);

enum class CutFamily {
  kCotaiInf1,
  kCotaiInf2,
  kCotaiInfOrd1,
  kCotaiInfOrd2,
  kCotaiUij1,
  kCotaiUij2,
  kCotajUij1,
  kCotajUij2,
  kCotaiUijMax1,
  kCotaiUijMax2,
  kCotajUijMax1,
  kCotajUijMax2,
  kCotazy,
  kValidOrdering,
  kValidSubsets1,  // I = {i}
  kValidSubsets2,  // I = {i, i'}
  kValidSubsets3,  // I = P \ {i}
  kValidSubsets4,  // I = P
  kOwa2eq,
  kCotayydis1,
  kCotayydis2,
  kYyrel1,
  kYyrel2,
  kYyrel3,
};

const char* label(CutFamily family);
CutFamily parse_cut(const std::string& text);
const std::vector<CutFamily>& all_cut_families();
// Every family except the theta upper bound, which changes the model's
// meaning for signed weights and is opted into explicitly.
std::vector<CutFamily> default_cut_families(const FormulationVariant& v);
bool needs_y(CutFamily family);
bool compatible(CutFamily family, const FormulationVariant& variant);

// Appends the family's rows to m (tag = label(family)). Throws Error when the
// family needs y variables the variant does not have.
void add_cut(OwaModel& m, CutFamily family, const BoundTable& bounds);
OwaModel apply_cut(OwaModel m, CutFamily family, const BoundTable& bounds);

struct Fixing {
  int i = 0;
  int j = 0;
  int value = 0;
  friend bool operator==(const Fixing&, const Fixing&) = default;
};

// z_ij = 0 when L1_ij exceeds the incumbent, z_ij = 1 when L0_ij does.
std::vector<Fixing> elimination_tests(const BoundTable& bounds,
                                      double incumbent_value);
// Fixes z_ij (through its expression in the model's variables): by bounds
// when z_ij is a variable, by an equality row tagged "fixing" otherwise.
void apply_fixings(OwaModel& m, const std::vector<Fixing>& fixings);

}  // namespace owa

#endif  // OWA_CUTS_HPP_
