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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "owa/bench.hpp"
#include "owa/errors.hpp"
#include "owa/instances.hpp"
#include "owa/milp/export.hpp"
#include "owa/oracle.hpp"

namespace {

using namespace owa;

// Bad option values; reported like CLI11 usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto usage_checked(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Rational parse_number(const std::string& text) {
  return usage_checked([&] { return parse_rational(text); });
}

FormulationVariant parse_variant(const std::string& text) {
  return usage_checked([&] { return FormulationVariant::parse(text); });
}

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<CutFamily> parse_cuts(const std::string& text,
                                  const FormulationVariant* variant) {
  if (text.empty() || text == "none") return {};
  if (text == "default") {
    if (variant) return default_cut_families(*variant);
    std::vector<CutFamily> all;
    for (CutFamily f : all_cut_families()) {
      if (f != CutFamily::kCotazy) all.push_back(f);
    }
    return all;
  }
  std::vector<CutFamily> out;
  for (const auto& name : split(text))
    out.push_back(usage_checked([&] { return parse_cut(name); }));
  return out;
}

BoundMethod parse_bounds(const std::string& text) {
  if (text == "lp") return BoundMethod::kLpRelaxation;
  if (text == "enumeration") return BoundMethod::kEnumeration;
  throw UsageError("unknown bound method '" + text + "' (lp, enumeration)");
}

DomainKind parse_problem(const std::string& text) {
  if (text == "spp") return DomainKind::kShortestPath;
  if (text == "pmp") return DomainKind::kPerfectMatching;
  throw UsageError("unknown problem '" + text + "' (spp, pmp)");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string join(const OutcomeVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += to_string(v[k]);
  }
  return out;
}

std::string join(const BinaryVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += char('0' + v[k]);
  }
  return out;
}

struct SolveArgs {
  std::string instance;
  std::string variant = "Fz";
  std::string cuts = "none";
  std::string bounds = "lp";
  bool eliminate = false;
  double time_limit = 600.0;
  long node_limit = -1;
  std::string big_m;
  std::string format = "text";
  bool timing = false;
};

int run_solve(const SolveArgs& a) {
  const Instance inst = resolve_instance(a.instance);
  SolveConfig config;
  config.variant = parse_variant(a.variant);
  config.cuts = parse_cuts(a.cuts, &config.variant);
  config.bound_method = parse_bounds(a.bounds);
  config.eliminate = a.eliminate;
  config.time_limit_s = a.time_limit;
  config.node_limit = a.node_limit;
  if (!a.big_m.empty()) config.big_m = parse_number(a.big_m);
  const SolveOutcome o = solve_instance(inst, config);
  if (a.format == "csv") {
    std::cout << report_csv_header(a.timing) << '\n'
              << report_csv_row(inst, config, o, a.timing) << '\n';
  } else {
    std::cout << format_report(inst, config, o, a.timing);
  }
  return 0;
}

int run_oracle(const std::string& name) {
  const Instance inst = resolve_instance(name);
  const OracleResult r =
      brute_force_optimum(inst.domain(), inst.costs, inst.weights);
  std::cout << "instance: " << inst.name << '\n';
  std::cout << "points: " << r.table.size() << '\n';
  std::cout << "x | y | y_sorted | owa\n";
  for (const auto& row : r.table) {
    std::cout << join(row.x) << " | " << join(row.y) << " | "
              << join(row.sorted) << " | " << to_string(row.value) << '\n';
  }
  if (r.feasible) {
    std::cout << "optimum: " << to_string(r.value) << '\n';
    std::cout << "argmin: " << join(r.argmin) << '\n';
  } else {
    std::cout << "optimum: infeasible\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact OWA combinatorial optimization: MILP formulations, "
               "valid inequalities and a brute-force oracle"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a seeded grid instance");
  GridSpec grid;
  std::string gen_problem = "spp", gen_alpha = "1/2", gen_out;
  gen->add_option("--side", grid.side, "Grid side (sqrt of |V|)")->check(CLI::Range(2, 1000));
  gen->add_option("--p", grid.p, "Number of objectives")->check(CLI::Range(2, 1000));
  gen->add_option("--alpha", gen_alpha, "Hurwicz parameter (decimal or fraction)");
  gen->add_option("--seed", grid.seed, "Generator seed");
  gen->add_option("--problem", gen_problem, "spp or pmp");
  gen->add_option("--out,-o", gen_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance with one formulation");
  SolveArgs sa;
  solve->add_option("--instance,-i", sa.instance, "example1|example2|example3 or a file")->required();
  solve->add_option("--variant,-v", sa.variant, "Formulation, e.g. Fz, FzyR2, FGSp, Fz+red");
  solve->add_option("--cuts", sa.cuts, "none, default, or a comma list of cut labels");
  solve->add_option("--bounds", sa.bounds, "Bound method for cuts: lp or enumeration");
  solve->add_flag("--eliminate", sa.eliminate, "Apply the variable-fixing tests");
  solve->add_option("--time-limit", sa.time_limit, "Seconds");
  solve->add_option("--node-limit", sa.node_limit, "Negative means unlimited");
  solve->add_option("--big-m", sa.big_m, "Override the big-M constant");
  solve->add_option("--format", sa.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  solve->add_flag("--timing", sa.timing, "Include wall-clock seconds");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Enumerate Q and print the value table");
  std::string oracle_instance;
  oracle->add_option("--instance,-i", oracle_instance, "Instance name or file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run the experiment matrix and print CSV");
  std::string b_sides = "3", b_ps = "3", b_alphas = "0.4,0.6,0.8", b_variant = "Fz",
              b_cuts = "none", b_problem = "spp", b_bounds = "lp", b_out;
  BenchSpec bs;
  bench->add_option("--sides", b_sides, "Comma list of grid sides");
  bench->add_option("--p", b_ps, "Comma list of objective counts");
  bench->add_option("--alpha", b_alphas, "Comma list of Hurwicz parameters");
  bench->add_option("--seeds", bs.seeds, "Instances per row")->check(CLI::Range(1, 100000));
  bench->add_option("--seed-base", bs.seed_base, "Seed of the first instance in each row");
  bench->add_option("--problem", b_problem, "Comma list of spp, pmp");
  bench->add_option("--variant", b_variant, "Comma list of formulations, or all");
  bench->add_option("--cuts", b_cuts, "none, default, or a comma list of cut labels");
  bench->add_option("--bounds", b_bounds, "lp or enumeration");
  bench->add_option("--time-limit", bs.time_limit_s, "Seconds per solve");
  bench->add_option("--node-limit", bs.node_limit, "Negative means unlimited");
  bench->add_option("--workers", bs.workers, "Parallel solves")->check(CLI::Range(1, 256));
  bench->add_option("--out,-o", b_out, "Output file (default stdout)");

  // export
  auto* exp = app.add_subcommand("export", "Write a formulation as MPS or LP text");
  SolveArgs ea;
  std::string e_format = "mps", e_out;
  exp->add_option("--instance,-i", ea.instance, "Instance name or file")->required();
  exp->add_option("--variant,-v", ea.variant, "Formulation");
  exp->add_option("--cuts", ea.cuts, "none, default, or a comma list of cut labels");
  exp->add_option("--bounds", ea.bounds, "lp or enumeration");
  exp->add_option("--big-m", ea.big_m, "Override the big-M constant");
  exp->add_option("--format", e_format, "mps or lp")->check(CLI::IsMember({"mps", "lp"}));
  exp->add_option("--out,-o", e_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      grid.alpha = parse_number(gen_alpha);
      grid.kind = parse_problem(gen_problem);
      emit(write_instance(generate_grid(grid)), gen_out);
      return 0;
    }
    if (*solve) return run_solve(sa);
    if (*oracle) return run_oracle(oracle_instance);
    if (*bench) {
      bs.kinds.clear();
      for (const auto& s : split(b_problem)) bs.kinds.push_back(parse_problem(s));
      bs.sides.clear();
      for (const auto& s : split(b_sides)) bs.sides.push_back(std::stoi(s));
      bs.ps.clear();
      for (const auto& s : split(b_ps)) bs.ps.push_back(std::stoi(s));
      bs.alphas.clear();
      for (const auto& s : split(b_alphas)) bs.alphas.push_back(parse_number(s));
      if (b_variant == "all") {
        bs.variants = all_variants();
      } else {
        for (const auto& s : split(b_variant))
          bs.variants.push_back(parse_variant(s));
      }
      bs.cuts = parse_cuts(b_cuts, nullptr);
      bs.bound_method = parse_bounds(b_bounds);
      std::ostringstream csv;
      csv << bench_csv_header() << '\n';
      for (const auto& row : run_bench(bs)) csv << bench_csv_row(row) << '\n';
      emit(csv.str(), b_out);
      return 0;
    }
    if (*exp) {
      const Instance inst = resolve_instance(ea.instance);
      SolveConfig config;
      config.variant = parse_variant(ea.variant);
      config.cuts = parse_cuts(ea.cuts, &config.variant);
      config.bound_method = parse_bounds(ea.bounds);
      if (!ea.big_m.empty()) config.big_m = parse_number(ea.big_m);
      OwaModel m = build_configured(inst, config);
      m.model.name = inst.name;
      emit(e_format == "lp" ? milp::export_lp(m.model) : milp::export_mps(m.model), e_out);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nRun with --help for more information.\n";
    return 1;
  } catch (const std::invalid_argument&) {
    std::cerr << "error: bad number in a list option\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
