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

#ifndef OWA_ORACLE_HPP_
#define OWA_ORACLE_HPP_

#include <string>
#include <vector>

#include "owa/core.hpp"
#include "owa/cuts.hpp"
#include "owa/domains.hpp"
#include "owa/formulations.hpp"
#include "owa/milp/branch_and_bound.hpp"

namespace owa {

struct OracleRow {
  BinaryVector x;
  OutcomeVector y;
  OutcomeVector sorted;
  Rational value;
};

struct OracleResult {
  bool feasible = false;
  BinaryVector argmin;  // lexicographically smallest among the minimizers
  Rational value;
  std::vector<OracleRow> table;  // in enumeration order
};

// Exact optimum over an enumerable domain. Throws EnumerationCapExceeded.
OracleResult brute_force_optimum(const DomainSpec& dom, const CostMatrix& c,
                                 const WeightVector& omega,
                                 std::size_t cap = default_enumeration_cap());

struct Verdict {
  bool pass = false;
  std::string reason;
  milp::SolveReport report;
  Rational oracle_value;
  bool oracle_feasible = false;
};

struct VerifyOptions {
  milp::BnbOptions bnb;
  BoundMethod bound_method = BoundMethod::kEnumeration;
  BuildOptions build;
  double tolerance = 1e-6;  // relative to max(1, |optimum|)
};

// Builds the variant with the given cut families, solves it and compares
// with the oracle. The verdict passes iff the solve is optimal, its value
// matches the oracle and its design vector lies in Q with the same direct
// OWA value.
Verdict verify_formulation(const DomainSpec& dom, const CostMatrix& c,
                           const WeightVector& omega,
                           const FormulationVariant& variant,
                           const std::vector<CutFamily>& cuts,
                           const VerifyOptions& options = {});

// Same check for an already built (possibly modified) model.
Verdict verify_model(const OwaModel& m, const DomainSpec& dom,
                     const OracleResult& oracle,
                     const VerifyOptions& options = {});

struct TightnessResult {
  long lifts = 0;
  long tight = 0;
  long violated = 0;
  double fraction() const { return lifts ? double(tight) / lifts : 0.0; }
};

// Evaluates one row at the canonical lift of every x in Q.
TightnessResult tightness_scan(const OwaModel& m, const DomainSpec& dom,
                               const milp::Constraint& row, double tol = 1e-6);

struct TagTightness {
  std::string name;
  TightnessResult result;
};

// One result per row carrying the tag, in model order.
std::vector<TagTightness> tightness_scan_tag(const OwaModel& m,
                                             const DomainSpec& dom,
                                             const std::string& tag,
                                             double tol = 1e-6);

}  // namespace owa

#endif  // OWA_ORACLE_HPP_
