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

#include "owa/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "owa/errors.hpp"

namespace owa {

namespace {

constexpr long kProbeNodes = 100;

std::string join_cuts(const std::vector<CutFamily>& cuts, char sep) {
  if (cuts.empty()) return "none";
  std::string out;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (k) out += sep;
    out += label(cuts[k]);
  }
  return out;
}

std::string bits(const BinaryVector& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += ' ';
    out += char('0' + x[k]);
  }
  return out;
}

std::string numbers(const std::vector<double>& v, char sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += format_number(v[k]);
  }
  return out;
}

std::string percent(double v) {
  return std::isnan(v) ? "-" : format_number(std::round(v * 100.0) / 100.0);
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  const double r = std::round(value);
  if (std::fabs(value - r) <= 1e-9 * std::max(1.0, std::fabs(value))) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", r == 0.0 ? 0.0 : r);
    return buf;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

OwaModel build_configured(const Instance& inst, const SolveConfig& config,
                          std::vector<Fixing>* fixings) {
  const DomainSpec dom = inst.domain();
  const Rational big_m =
      config.big_m ? *config.big_m : big_m_default(dom, inst.costs);
  BuildOptions options = config.build;
  if (inst.weights.has_negative()) options.signed_extension = true;
  OwaModel m = build(config.variant, dom, inst.costs, inst.weights, big_m, options);
  if (config.cuts.empty() && !config.eliminate) return m;
  const BoundTable bounds =
      compute_bounds(dom, inst.costs, inst.weights, config.bound_method);
  for (CutFamily f : config.cuts) add_cut(m, f, bounds);
  if (config.eliminate) {
    milp::BnbOptions probe;
    probe.node_limit = kProbeNodes;
    probe.time_limit_s = config.time_limit_s;
    const auto r = milp::branch_and_bound(m.model, probe);
    if (r.has_incumbent) {
      const double incumbent =
          to_double(evaluate_owa(design_of(m, r.values), inst.costs, inst.weights));
      const auto found = elimination_tests(bounds, incumbent);
      apply_fixings(m, found);
      if (fixings) *fixings = found;
    }
  }
  return m;
}

SolveOutcome solve_instance(const Instance& inst, const SolveConfig& config) {
  SolveOutcome out;
  OwaModel m = build_configured(inst, config, &out.fixings);
  out.big_m = m.big_m;
  out.variables = m.model.num_variables();
  out.constraints = m.model.num_constraints();
  milp::BnbOptions options;
  options.time_limit_s = config.time_limit_s;
  options.node_limit = config.node_limit;
  out.report = milp::branch_and_bound(m.model, options);
  if (out.report.has_incumbent) {
    out.x = design_of(m, out.report.values);
    out.theta = theta_display(m, out.report.values);
  }
  return out;
}

std::string format_report(const Instance& inst, const SolveConfig& config,
                          const SolveOutcome& o, bool timing) {
  const auto& r = o.report;
  std::ostringstream out;
  out << "instance: " << inst.name << '\n';
  out << "domain: " << to_string(inst.kind) << '\n';
  out << "variant: " << config.variant.name() << '\n';
  out << "cuts: " << join_cuts(config.cuts, ',') << '\n';
  out << "big_m: " << to_string(o.big_m) << '\n';
  out << "size: " << o.variables << " variables, " << o.constraints
      << " constraints\n";
  if (config.eliminate) out << "fixings: " << o.fixings.size() << '\n';
  out << "status: " << milp::to_string(r.status) << '\n';
  if (r.has_incumbent) {
    out << "objective: " << format_number(r.objective) << '\n';
    out << "bound: " << format_number(r.bound) << '\n';
    out << "x: " << bits(o.x) << '\n';
    out << "theta: " << numbers(o.theta, ' ') << '\n';
  }
  out << "nodes: " << r.node_count << '\n';
  out << "lp_iterations: " << r.lp_iterations << '\n';
  out << "root_lp: " << format_number(r.root_lp_value) << '\n';
  out << "gap_lr: " << percent(r.gap_lr) << '\n';
  out << "gap: " << percent(r.gap) << '\n';
  if (timing) out << "wall_seconds: " << format_number(r.wall_seconds) << '\n';
  return out.str();
}

std::string report_csv_header(bool timing) {
  std::string h =
      "instance,variant,cuts,status,objective,bound,nodes,root_lp,gap_lr,gap";
  if (timing) h += ",wall_seconds";
  return h;
}

std::string report_csv_row(const Instance& inst, const SolveConfig& config,
                           const SolveOutcome& o, bool timing) {
  const auto& r = o.report;
  std::ostringstream out;
  out << inst.name << ',' << config.variant.name() << ','
      << join_cuts(config.cuts, ';') << ',' << milp::to_string(r.status) << ','
      << (r.has_incumbent ? format_number(r.objective) : "-") << ','
      << (r.has_incumbent ? format_number(r.bound) : "-") << ',' << r.node_count
      << ',' << format_number(r.root_lp_value) << ',' << percent(r.gap_lr) << ','
      << percent(r.gap);
  if (timing) out << ',' << format_number(r.wall_seconds);
  return out.str();
}

BenchRow aggregate(DomainKind kind, const std::string& variant, int vertices,
                   int p, const Rational& alpha,
                   const std::vector<SeedResult>& results,
                   double time_limit_s) {
  BenchRow row;
  row.kind = kind;
  row.variant = variant;
  row.vertices = vertices;
  row.p = p;
  row.alpha = alpha;
  row.seeds = static_cast<int>(results.size());
  double t_sum = 0.0, nodes_sum = 0.0, gap_lr_sum = 0.0;
  int gap_lr_count = 0;
  double worst_t = 0.0, worst_gap = 0.0;
  for (const auto& s : results) {
    if (s.failed) {
      ++row.failed;
      t_sum += time_limit_s;
      continue;
    }
    if (s.solved) {
      ++row.solved;
      t_sum += s.seconds;
      worst_t = std::max(worst_t, s.seconds);
    } else {
      t_sum += time_limit_s;
      row.worst_is_gap = true;
      if (!std::isnan(s.gap)) worst_gap = std::max(worst_gap, s.gap);
    }
    nodes_sum += double(s.nodes);
    if (!std::isnan(s.gap_lr)) {
      gap_lr_sum += s.gap_lr;
      ++gap_lr_count;
    }
  }
  const int counted = row.seeds - row.failed;
  row.t_avg = row.seeds ? t_sum / row.seeds : 0.0;
  row.worst = row.worst_is_gap ? worst_gap : worst_t;
  row.nodes_avg = counted ? nodes_sum / counted : 0.0;
  row.gap_lr_avg = gap_lr_count ? gap_lr_sum / gap_lr_count
                                : std::numeric_limits<double>::quiet_NaN();
  return row;
}

std::string bench_csv_header() {
  return "problem,variant,V,p,alpha,t,solved,seeds,failed,worst_t_or_gap,nodes,"
         "gap_LR";
}

std::string bench_csv_row(const BenchRow& row) {
  auto fixed = [](double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return std::string(buf);
  };
  std::ostringstream out;
  out << (row.kind == DomainKind::kShortestPath ? "spp" : "pmp") << ','
      << row.variant << ',' << row.vertices << ',' << row.p << ','
      << format_number(to_double(row.alpha)) << ',' << fixed(row.t_avg, 3) << ','
      << row.solved << ',' << row.seeds << ',' << row.failed << ','
      << (row.worst_is_gap ? fixed(row.worst, 2) + "%" : fixed(row.worst, 3))
      << ',' << fixed(row.nodes_avg, 1) << ','
      << (std::isnan(row.gap_lr_avg) ? std::string("-") : fixed(row.gap_lr_avg, 2));
  return out.str();
}

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  if (spec.seeds < 1) throw InvariantError("bench needs at least one seed");
  if (spec.variants.empty()) throw InvariantError("bench needs a variant");
  struct Group {
    DomainKind kind;
    int side, p;
    Rational alpha;
    FormulationVariant variant;
  };
  std::vector<Group> groups;
  for (DomainKind kind : spec.kinds)
    for (int side : spec.sides)
      for (int p : spec.ps)
        for (const Rational& alpha : spec.alphas)
          for (const auto& v : spec.variants) groups.push_back({kind, side, p, alpha, v});

  const std::size_t jobs = groups.size() * std::size_t(spec.seeds);
  std::vector<SeedResult> results(jobs);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const Group& g = groups[job / spec.seeds];
      const int k = static_cast<int>(job % spec.seeds);
      SeedResult& res = results[job];
      try {
        GridSpec gs;
        gs.kind = g.kind;
        gs.side = g.side;
        gs.p = g.p;
        gs.alpha = g.alpha;
        gs.seed = spec.seed_base + std::uint64_t(k);
        const Instance inst = generate_grid(gs);
        SolveConfig config;
        config.variant = g.variant;
        for (CutFamily f : spec.cuts) {
          if (compatible(f, g.variant)) config.cuts.push_back(f);
        }
        config.bound_method = spec.bound_method;
        config.time_limit_s = spec.time_limit_s;
        config.node_limit = spec.node_limit;
        const SolveOutcome o = solve_instance(inst, config);
        res.solved = o.report.status == milp::SolveStatus::kOptimal;
        res.seconds = o.report.wall_seconds;
        res.gap = o.report.gap;
        res.nodes = o.report.node_count;
        res.gap_lr = o.report.gap_lr;
      } catch (const Error&) {
        res.failed = true;
      }
    }
  };
  const int workers = std::max(1, spec.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<BenchRow> rows;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const Group& g = groups[gi];
    std::vector<SeedResult> slice(results.begin() + gi * spec.seeds,
                                  results.begin() + (gi + 1) * spec.seeds);
    rows.push_back(aggregate(g.kind, g.variant.name(), g.side * g.side, g.p,
                             g.alpha, slice, spec.time_limit_s));
  }
  return rows;
}

}  // namespace owa
