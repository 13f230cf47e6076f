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

#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "owa/milp/branch_and_bound.hpp"

namespace owa::testing {

namespace {

const Rational kAlphas[] = {Rational(2, 5), Rational(3, 5), Rational(4, 5)};

std::vector<Instance> grid_corpus(DomainKind kind, int count,
                                  std::uint64_t seed0) {
  std::vector<Instance> out;
  for (int k = 0; k < count; ++k) {
    GridSpec spec;
    spec.kind = kind;
    spec.side = 3;
    spec.p = 2 + k % 2;
    spec.alpha = kAlphas[(k / 2) % 3];
    spec.seed = seed0 + std::uint64_t(k);
    out.push_back(generate_grid(spec));
  }
  return out;
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

std::vector<Instance> spp_corpus() {
  return grid_corpus(DomainKind::kShortestPath, 50, 1000);
}

std::vector<Instance> pmp_corpus() {
  return grid_corpus(DomainKind::kPerfectMatching, 30, 2000);
}

std::vector<Instance> full_corpus() {
  auto out = spp_corpus();
  for (auto& inst : pmp_corpus()) out.push_back(std::move(inst));
  return out;
}

std::vector<Instance> worked_examples() {
  return {builtin_instance("example1"), builtin_instance("example2"),
          builtin_instance("example3")};
}

Instance random_small(std::mt19937_64& rng) {
  Instance inst;
  inst.kind = DomainKind::kExplicitCardinality;
  inst.n = uniform(rng, 3, 6);
  inst.cardinality = uniform(rng, 1, inst.n - 1);
  const int p = uniform(rng, 2, 4);
  std::vector<Rational> entries;
  for (int k = 0; k < p * inst.n; ++k) entries.emplace_back(uniform(rng, 0, 9));
  inst.costs = CostMatrix(p, inst.n, std::move(entries));
  std::vector<Rational> w;
  for (int j = 0; j < p; ++j) w.emplace_back(uniform(rng, 0, 5));
  inst.weights = WeightVector(std::move(w));
  inst.name = "random";
  return inst;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int p) {
  std::vector<int> v(p);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

double solve_value(const OwaModel& m) {
  const auto r = milp::branch_and_bound(m.model);
  if (r.status != milp::SolveStatus::kOptimal)
    throw std::runtime_error(m.variant.name() + " did not reach optimality");
  return r.objective;
}

OwaModel build_default(const Instance& inst, const FormulationVariant& v) {
  const DomainSpec dom = inst.domain();
  return build(v, dom, inst.costs, inst.weights, big_m_default(dom, inst.costs));
}

NestingWitnesses nesting_witnesses(const Instance& inst, const BinaryVector& x) {
  const DomainSpec dom = inst.domain();
  const Rational big_m = big_m_default(dom, inst.costs);
  auto make = [&](const char* name) {
    return build(FormulationVariant::parse(name), dom, inst.costs, inst.weights, big_m);
  };
  const OwaModel z = make("Fz"), r1 = make("FzR1"), r2 = make("FzR2"), r3 = make("FzR3");
  const int p = z.p;
  const double big = to_double(big_m);
  const std::vector<double> lift = canonical_lift(z, dom, x);
  NestingWitnesses out;

  // Break the ordering of the last two positions.
  std::vector<double> w1 = lift;
  w1[z.theta_vars[p - 1]] = w1[z.theta_vars[p - 2]] + 1.0;
  out.r1_not_z = is_member(r1, w1) && !is_member(z, w1);

  // The first-placed objective also takes the second position.
  const auto sigma = sort_outcomes(inst.costs.outcomes(x)).order.sigma();
  std::vector<double> w2 = lift;
  w2[z.perm_var(sigma[0], 1)] = 1.0;
  w2[z.perm_var(sigma[1], 1)] = 0.0;
  for (int j = 0; j < p; ++j) w2[z.theta_vars[j]] = (p + 1) * big;
  out.r2_not_r1 = is_member(r2, w2) && !is_member(r1, w2);

  // No objective is placed at all.
  std::vector<double> w3 = lift;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) w3[z.perm_var(i, j)] = 0.0;
  }
  for (int j = 0; j < p; ++j) w3[z.theta_vars[j]] = (p + 1) * big;
  out.r3_not_r2 = is_member(r3, w3) && !is_member(r2, w3);
  return out;
}

}  // namespace owa::testing
