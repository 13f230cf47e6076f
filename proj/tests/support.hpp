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

#ifndef OWA_TESTS_SUPPORT_HPP_
#define OWA_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "owa/formulations.hpp"
#include "owa/instances.hpp"

namespace owa::testing {

// 50 shortest-path grids (side 3), p alternating 2/3, alpha cycling through
// 0.4/0.6/0.8, seeds 1000..1049.
std::vector<Instance> spp_corpus();
// 30 perfect-matching grids (side 3, last vertex removed), seeds 2000..2029.
std::vector<Instance> pmp_corpus();
std::vector<Instance> full_corpus();
std::vector<Instance> worked_examples();

// Random small cardinality instance for property tests: n in [3,6],
// k in [1,n-1], p in [2,4], integer costs in [0,9], weights in [0,5].
Instance random_small(std::mt19937_64& rng);
// Random permutation of size p.
std::vector<int> random_permutation(std::mt19937_64& rng, int p);

// Optimum of the variant by branch-and-bound; throws unless optimal.
double solve_value(const OwaModel& m);
OwaModel build_default(const Instance& inst, const FormulationVariant& v);

// Points separating the nested feasible sets of Fz, FzR1, FzR2, FzR3, built
// from the canonical lift of `x`. Each flag is true when the witness lies in
// the larger set and outside the smaller one.
struct NestingWitnesses {
  bool r1_not_z = false;
  bool r2_not_r1 = false;
  bool r3_not_r2 = false;
  bool all() const { return r1_not_z && r2_not_r1 && r3_not_r2; }
};
NestingWitnesses nesting_witnesses(const Instance& inst, const BinaryVector& x);

}  // namespace owa::testing

#endif  // OWA_TESTS_SUPPORT_HPP_
