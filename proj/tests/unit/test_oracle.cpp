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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "owa/errors.hpp"
#include "owa/oracle.hpp"
#include "support.hpp"

using namespace owa;

TEST_CASE("oracle optima of the worked examples") {
  const auto r1 = brute_force_optimum(builtin_instance("example1").domain(),
                                      builtin_instance("example1").costs,
                                      builtin_instance("example1").weights);
  REQUIRE(r1.feasible);
  CHECK(r1.value == 23);
  CHECK(r1.argmin == BinaryVector{1, 0, 1});
  REQUIRE(r1.table.size() == 3);
  CHECK(r1.table[0].value == 24);
  CHECK(r1.table[2].value == 25);

  const Instance e2 = builtin_instance("example2");
  const auto r2 = brute_force_optimum(e2.domain(), e2.costs, e2.weights);
  CHECK(r2.value == 4);

  const Instance e3 = builtin_instance("example3");
  const auto r3 = brute_force_optimum(e3.domain(), e3.costs, e3.weights);
  REQUIRE(r3.table.size() == 3);
  CHECK(r3.argmin == r3.table[2].x);
}

TEST_CASE("property: oracle table is self-consistent") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = testing::random_small(rng);
    const auto r = brute_force_optimum(inst.domain(), inst.costs, inst.weights);
    REQUIRE(r.feasible);
    Rational best = r.table.front().value;
    for (const auto& row : r.table) {
      CHECK(row.y == inst.costs.outcomes(row.x));
      CHECK(row.value == evaluate_owa(row.x, inst.costs, inst.weights));
      CHECK(std::is_sorted(row.sorted.rbegin(), row.sorted.rend()));
      if (row.value < best) best = row.value;
    }
    CHECK(r.value == best);
    CHECK(evaluate_owa(r.argmin, inst.costs, inst.weights) == r.value);
    for (const auto& row : r.table)
      if (row.value == r.value) CHECK_FALSE(row.x < r.argmin);
  }
}

TEST_CASE("verify_formulation on the worked examples") {
  const Instance e1 = builtin_instance("example1");
  const auto v = verify_formulation(e1.domain(), e1.costs, e1.weights,
                                    FormulationVariant::parse("FsR3"), {});
  CHECK_MESSAGE(v.pass, v.reason);
  CHECK(v.oracle_value == 23);

  const Instance e2 = builtin_instance("example2");
  for (const auto& variant : all_variants()) {
    const auto r = verify_formulation(e2.domain(), e2.costs, e2.weights, variant, {});
    CHECK_MESSAGE(r.pass, variant.name() << ": " << r.reason);
    CHECK(r.report.objective == doctest::Approx(4.0));
  }
}

TEST_CASE("verify_model catches a broken formulation") {
  const Instance e1 = builtin_instance("example1");
  const DomainSpec dom = e1.domain();
  const auto oracle = brute_force_optimum(dom, e1.costs, e1.weights);
  auto m = testing::build_default(e1, FormulationVariant::parse("Fz"));
  CHECK(verify_model(m, dom, oracle).pass);
  CHECK(m.model.remove_rows_with_tag("owab") > 0);
  const auto v = verify_model(m, dom, oracle);
  CHECK_FALSE(v.pass);
  CHECK(!v.reason.empty());
}

TEST_CASE("tightness scans") {
  const Instance e1 = builtin_instance("example1");
  const DomainSpec dom = e1.domain();
  const auto m = testing::build_default(e1, FormulationVariant::parse("Fz"));

  const auto owab = tightness_scan_tag(m, dom, "owab");
  REQUIRE(!owab.empty());
  for (const auto& t : owab) {
    CHECK(t.result.lifts == 3);
    CHECK(t.result.violated == 0);
  }

  auto row_of = [](const milp::LinExpr& lhs, milp::Sense sense, double rhs) {
    milp::Constraint row;
    row.name = "probe";
    row.terms = lhs.terms();
    row.sense = sense;
    row.rhs = rhs - lhs.constant();
    return row;
  };
  const auto s = tightness_scan(m, dom, row_of(m.outcome_expr(0), milp::Sense::kLessEqual, 1000.0));
  CHECK(s.lifts == 3);
  CHECK(s.tight == 0);
  CHECK(s.fraction() == 0.0);

  // Every objective occupies some position.
  const auto e = tightness_scan(m, dom, row_of(m.z_tail_expr(0, 0), milp::Sense::kEqual, 1.0));
  CHECK(e.fraction() == 1.0);
}

TEST_CASE("oracle respects the enumeration cap") {
  const Instance e1 = builtin_instance("example1");
  CHECK_THROWS_AS(brute_force_optimum(e1.domain(), e1.costs, e1.weights, 2), EnumerationCapExceeded);
  CHECK_NOTHROW(brute_force_optimum(e1.domain(), e1.costs, e1.weights, 3));
}
