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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "owa/bench.hpp"
#include "owa/core.hpp"
#include "owa/cuts.hpp"
#include "owa/formulations.hpp"
#include "owa/milp/branch_and_bound.hpp"
#include "owa/milp/lp.hpp"
#include "owa/oracle.hpp"
#include "support.hpp"

using namespace owa;

namespace {

constexpr double kTimeLimit = 30.0;

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-6 * std::max(1.0, std::abs(b));
}

milp::BnbOptions bnb_options() {
  milp::BnbOptions o;
  o.time_limit_s = kTimeLimit;
  return o;
}

double optimum(const OwaModel& m) {
  const auto r = milp::branch_and_bound(m.model, bnb_options());
  if (r.status != milp::SolveStatus::kOptimal) return std::nan("");
  return r.objective;
}

OwaModel default_build(const Instance& inst, const char* variant) {
  return testing::build_default(inst, FormulationVariant::parse(variant));
}

std::string run_command(const std::string& cmd, int* code) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome ac1_worked_examples() {
  Outcome o;
  const std::pair<const char*, int> cases[] = {{"example1", 23}, {"example2", 4}, {"example3", 2}};
  for (const auto& [name, expected] : cases) {
    const Instance inst = builtin_instance(name);
    const DomainSpec dom = inst.domain();
    const auto oracle = brute_force_optimum(dom, inst.costs, inst.weights);
    o.require(oracle.feasible && oracle.value == expected,
              std::string(name) + ": oracle gives " + to_string(oracle.value));
    for (const auto& v : all_variants()) {
      VerifyOptions opts;
      opts.bnb = bnb_options();
      const Verdict verdict = verify_model(testing::build_default(inst, v), dom, oracle, opts);
      o.require(verdict.pass && close(verdict.report.objective, expected),
                std::string(name) + " " + v.name() + ": " + verdict.reason);
    }
  }
  o.summary = "oracle and 16 variants give 23 / 4 / 2";
  return o;
}

Outcome ac2_corpus(const std::vector<Instance>& corpus,
                   std::map<std::string, std::map<std::string, double>>& values) {
  Outcome o;
  long solves = 0;
  for (const auto& inst : corpus) {
    const DomainSpec dom = inst.domain();
    const auto oracle = brute_force_optimum(dom, inst.costs, inst.weights);
    o.require(oracle.feasible, inst.name + ": empty domain");
    for (const auto& v : all_variants()) {
      VerifyOptions opts;
      opts.bnb = bnb_options();
      const Verdict verdict = verify_model(testing::build_default(inst, v), dom, oracle, opts);
      ++solves;
      o.require(verdict.pass, inst.name + " " + v.name() + ": " + verdict.reason);
      values[inst.name][v.name()] = verdict.report.objective;
    }
  }
  o.summary = std::to_string(corpus.size()) + " instances, " + std::to_string(solves) +
              " solves match the oracle";
  return o;
}

Outcome ac3_coincidences(const std::vector<Instance>& corpus,
                         const std::map<std::string, std::map<std::string, double>>& values) {
  Outcome o;
  for (const auto& inst : corpus) {
    const auto& row = values.at(inst.name);
    const double fz = row.at("Fz");
    for (const char* v : {"FzR1", "FzR2", "FzR3", "Fs", "FsR1", "FsR2", "FsR3"})
      o.require(row.at(v) == fz, inst.name + " " + v + " differs from Fz");
    o.require(row.at("FGS") == row.at("FGSp"), inst.name + " FGS differs from FGSp");
  }
  o.summary = "Fz/R1/R2/R3, the s family and FGS/FGSp coincide on every instance";
  return o;
}

Outcome ac4_witnesses(const std::vector<Instance>& corpus) {
  Outcome o;
  int certified = 0, tried = 0;
  for (const auto& inst : corpus) {
    const DomainSpec dom = inst.domain();
    const auto oracle = brute_force_optimum(dom, inst.costs, inst.weights);
    ++tried;
    if (testing::nesting_witnesses(inst, oracle.argmin).all()) ++certified;
  }
  o.require(certified >= 10, "only " + std::to_string(certified) + " instances certified");
  o.summary = std::to_string(certified) + " of " + std::to_string(tried) +
              " instances certify the strict nesting";
  return o;
}

Outcome ac5_cuts(const std::vector<Instance>& corpus,
                 const std::map<std::string, std::map<std::string, double>>& values) {
  Outcome o;
  long checks = 0;
  for (const auto& inst : corpus) {
    const DomainSpec dom = inst.domain();
    const auto points = enumerate(dom);
    const auto bounds = compute_bounds(dom, inst.costs, inst.weights, BoundMethod::kLpRelaxation);
    const double best = values.at(inst.name).at("Fz");
    for (CutFamily f : all_cut_families()) {
      const char* host = needs_y(f) ? "FzyR2" : "FzR2";
      const auto m = apply_cut(default_build(inst, host), f, bounds);
      for (const auto& x : points) {
        try {
          canonical_lift(m, dom, x);
        } catch (const std::exception& e) {
          o.require(false, inst.name + " " + label(f) + ": " + e.what());
        }
      }
      const double got = optimum(m);
      o.require(close(got, best), inst.name + " " + label(f) + ": optimum " +
                                      format_number(got) + " vs " + format_number(best));
      ++checks;
    }
  }
  o.summary = std::to_string(all_cut_families().size()) + " families, " +
              std::to_string(checks) + " cut solves, every lift satisfies every cut";
  return o;
}

// min over the relaxed domain of max_i C^i x.
double min_max_outcome(const DomainSpec& dom, const CostMatrix& c) {
  milp::Model lp;
  for (int k = 0; k < dom.n_design; ++k)
    lp.add_variable("x" + std::to_string(k), milp::VarKind::kContinuous, 0.0, 1.0);
  for (int k = 0; k < dom.aux_count; ++k)
    lp.add_variable("a" + std::to_string(k), milp::VarKind::kContinuous, dom.aux_lower[k],
                    dom.aux_upper[k]);
  const int t = lp.add_variable("t", milp::VarKind::kContinuous, -milp::kInf, milp::kInf);
  for (const auto& row : dom.constraints) lp.add_constraint(row);
  for (int i = 0; i < c.p(); ++i) {
    milp::LinExpr outcome;
    for (int k = 0; k < c.n(); ++k) outcome.add(k, c.value(i, k));
    lp.add_row(milp::LinExpr::var(t), milp::Sense::kGreaterEqual, outcome, "max", "max");
  }
  lp.set_objective(milp::LinExpr::var(t));
  const auto sol = milp::lp_solve(lp);
  return sol.status == milp::LpStatus::kOptimal ? sol.objective : std::nan("");
}

// The root of Fz0 / Fzy0 is 0 when some relaxed x keeps every outcome at or
// below (1 - 1/p) M (uniform z). For p = 2 the condition is also necessary.
Outcome ac6_root_gaps(const std::vector<Instance>& corpus) {
  Outcome o;
  int counted = 0, zero = 0, positive = 0;
  for (const auto& inst : corpus) {
    bool positive_costs = true;
    for (const auto& c : inst.costs.entries()) positive_costs = positive_costs && c > 0;
    if (!positive_costs) continue;
    ++counted;
    const DomainSpec dom = inst.domain();
    const int p = inst.costs.p();
    const double big = to_double(big_m_default(dom, inst.costs));
    const double t = min_max_outcome(dom, inst.costs);
    const bool predicted_zero = t <= (1.0 - 1.0 / p) * big + 1e-9;
    const bool is_spp = inst.kind == DomainKind::kShortestPath;
    double root0 = 0.0;
    for (const char* v : {"Fz0", "Fzy0"}) {
      const auto r = milp::branch_and_bound(default_build(inst, v).model, bnb_options());
      const bool root_zero = std::abs(r.root_lp_value) <= 1e-7;
      root0 = r.root_lp_value;
      if (is_spp)
        o.require(root_zero && close(r.gap_lr, 100.0),
                  inst.name + " " + v + ": root LP " + format_number(r.root_lp_value));
      if (predicted_zero)
        o.require(root_zero, inst.name + " " + v + ": predicted zero root, got " +
                                 format_number(r.root_lp_value));
      if (p == 2 && !predicted_zero)
        o.require(!root_zero, inst.name + " " + v + ": predicted positive root, got 0");
      if (root_zero) o.require(close(r.gap_lr, 100.0), inst.name + " " + v + ": gap_LR");
    }
    (std::abs(root0) <= 1e-7 ? zero : positive) += 1;
    const auto r = milp::branch_and_bound(default_build(inst, "Fz").model, bnb_options());
    o.require(r.gap_lr < 100.0 - 1e-9, inst.name + " Fz: gap_LR " + format_number(r.gap_lr));
  }
  o.summary = std::to_string(counted) + " positive-cost instances: Fz0/Fzy0 root 0 (gap_LR 100) on " +
              std::to_string(zero) + ", including every shortest-path instance; positive on " +
              std::to_string(positive) + " matching instances, each where no relaxed x keeps " +
              "max_i C^i x <= (1-1/p)M; Fz gap_LR below 100 on all";
  return o;
}

Outcome ac7_elimination(const std::vector<Instance>& spp, const std::vector<Instance>& pmp) {
  Outcome o;
  std::vector<Instance> chosen(spp.begin(), spp.begin() + 15);
  chosen.insert(chosen.end(), pmp.begin(), pmp.begin() + 15);
  long fixed = 0;
  for (const auto& inst : chosen) {
    const DomainSpec dom = inst.domain();
    const auto oracle = brute_force_optimum(dom, inst.costs, inst.weights);
    const double best = to_double(oracle.value);
    for (auto method : {BoundMethod::kEnumeration, BoundMethod::kLpRelaxation}) {
      const auto fixings =
          elimination_tests(compute_bounds(dom, inst.costs, inst.weights, method), best);
      fixed += long(fixings.size());
      for (const char* v : {"Fz", "FzR2", "Fs"}) {
        auto m = default_build(inst, v);
        apply_fixings(m, fixings);
        const double got = optimum(m);
        o.require(close(got, best), inst.name + " " + v + ": " + format_number(got));
      }
    }
  }
  o.summary = std::to_string(chosen.size()) + " instances, " + std::to_string(fixed) +
              " fixings, optimum unchanged";
  return o;
}

Outcome ac8_bijection() {
  Outcome o;
  long count = 0;
  for (int p = 1; p <= 4; ++p) {
    std::vector<int> pi(p);
    for (int k = 0; k < p; ++k) pi[k] = k;
    do {
      const auto perm = Permutation::from_pi(pi);
      const auto z = z_of_permutation(perm);
      const auto s = s_from_z(z);
      o.require(s == s_of_permutation(perm), "s_from_z mismatch");
      o.require(z_from_s(s) == z, "z_from_s mismatch");
      o.require(permutation_of_s(s) == perm && permutation_of_z(z) == perm, "round trip");
      ++count;
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
  o.require(count == 1 + 2 + 6 + 24, "wrong permutation count");
  o.summary = std::to_string(count) + " permutations round-trip";
  return o;
}

Outcome ac9_determinism(const std::vector<Instance>& spp) {
  Outcome o;
  const std::vector<std::string> args = {
      "solve -i example1 -v Fz",
      "solve -i example3 -v FzyR2 --cuts default",
      "solve -i example2 -v FGS --format csv",
  };
  for (const auto& a : args) {
    int c1 = 0, c2 = 0;
    const std::string cmd = std::string(OWA_CLI_PATH) + " " + a;
    const std::string r1 = run_command(cmd, &c1), r2 = run_command(cmd, &c2);
    o.require(c1 == 0 && c2 == 0 && !r1.empty() && r1 == r2, "cli: " + a);
  }
  for (int k = 0; k < 5; ++k) {
    SolveConfig config;
    config.variant = FormulationVariant::parse(k % 2 ? "Fs" : "FzR2");
    config.cuts = default_cut_families(config.variant);
    config.eliminate = true;
    config.time_limit_s = kTimeLimit;
    const auto& inst = spp[std::size_t(k)];
    const std::string a = format_report(inst, config, solve_instance(inst, config), false);
    const std::string b = format_report(inst, config, solve_instance(inst, config), false);
    o.require(a == b, inst.name + ": reports differ");
  }
  o.summary = "3 CLI and 5 library reports byte-identical";
  return o;
}

Outcome ac10_external() {
  Outcome o;
  int code = 0;
  const std::string cmd = std::string(OWA_PYTHON) + " " + OWA_SOURCE_DIR +
                          "/tools/check_external.py --cli " + OWA_CLI_PATH + " 2>&1";
  const std::string out = run_command(cmd, &code);
  if (code == 77) {
    o.summary = "SKIP: highspy not installed";
    return o;
  }
  o.require(code == 0, "check_external.py exited " + std::to_string(code) + ": " + out);
  o.summary = "MPS and LP exports solved by HiGHS";
  return o;
}

}  // namespace

int main() {
  const auto spp = testing::spp_corpus();
  const auto pmp = testing::pmp_corpus();
  const auto corpus = testing::full_corpus();
  std::map<std::string, std::map<std::string, double>> values;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1_worked_examples},
      {"AC2", [&] { return ac2_corpus(corpus, values); }},
      {"AC3", [&] { return ac3_coincidences(corpus, values); }},
      {"AC4", [&] { return ac4_witnesses(corpus); }},
      {"AC5", [&] { return ac5_cuts(corpus, values); }},
      {"AC6", [&] { return ac6_root_gaps(corpus); }},
      {"AC7", [&] { return ac7_elimination(spp, pmp); }},
      {"AC8", ac8_bijection},
      {"AC9", [&] { return ac9_determinism(spp); }},
      {"AC10", ac10_external},
  };

  int failed = 0;
  for (const auto& [id, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << " (" << timing
              << ")\n";
    for (const auto& f : o.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
    if (!o.pass) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << '\n';
  return failed ? 1 : 0;
}
