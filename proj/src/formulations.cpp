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

#include "owa/formulations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "owa/errors.hpp"
#include "owa/milp/lp.hpp"

namespace owa {

using milp::LinExpr;
using milp::Sense;

namespace {

struct CatalogEntry {
  Family family;
  Flavor flavor;
  const char* name;
};

constexpr CatalogEntry kCatalog[] = {
    {Family::kZ, Flavor::kBase0, "Fz0"},    {Family::kZ, Flavor::kBase, "Fz"},
    {Family::kZ, Flavor::kR1, "FzR1"},      {Family::kZ, Flavor::kR2, "FzR2"},
    {Family::kZ, Flavor::kR3, "FzR3"},      {Family::kZY, Flavor::kBase0, "Fzy0"},
    {Family::kZY, Flavor::kBase, "Fzy"},    {Family::kZY, Flavor::kR1, "FzyR1"},
    {Family::kZY, Flavor::kR2, "FzyR2"},    {Family::kZY, Flavor::kR3, "FzyR3"},
    {Family::kS, Flavor::kBase, "Fs"},      {Family::kS, Flavor::kR1, "FsR1"},
    {Family::kS, Flavor::kR2, "FsR2"},      {Family::kS, Flavor::kR3, "FsR3"},
    {Family::kGS, Flavor::kBase, "FGS"},    {Family::kGS, Flavor::kGSPrime, "FGSp"},
};

const CatalogEntry* find_entry(Family f, Flavor v) {
  for (const auto& e : kCatalog) {
    if (e.family == f && e.flavor == v) return &e;
  }
  return nullptr;
}

std::string index_suffix(std::initializer_list<int> idx) {
  std::string s;
  for (int k : idx) s += "_" + std::to_string(k + 1);
  return s;
}

}  // namespace

std::string FormulationVariant::name() const {
  const CatalogEntry* e = find_entry(family, flavor);
  std::string base = e ? e->name : "F?";
  return reduced_first_column ? base + "+red" : base;
}

FormulationVariant FormulationVariant::parse(const std::string& text) {
  std::string key = text;
  bool reduced = false;
  if (key == "Fz'" || key == "Fzy'") {
    key.pop_back();
    reduced = true;
  } else if (key.size() > 4 && key.compare(key.size() - 4, 4, "+red") == 0) {
    key.resize(key.size() - 4);
    reduced = true;
  }
  for (const auto& e : kCatalog) {
    if (key == e.name) {
      FormulationVariant v{e.family, e.flavor, reduced};
      if (reduced && !v.supports_reduction())
        throw Error("variant " + key + " has no reduced build");
      return v;
    }
  }
  throw Error("unknown formulation variant '" + text + "'");
}

bool FormulationVariant::is_cataloged() const {
  return find_entry(family, flavor) != nullptr;
}

bool FormulationVariant::supports_reduction() const {
  if (family == Family::kS || family == Family::kGS) return true;
  return flavor == Flavor::kBase0 || flavor == Flavor::kBase ||
         flavor == Flavor::kR1;
}

bool FormulationVariant::keeps_ordering() const {
  return flavor == Flavor::kBase0 || flavor == Flavor::kBase ||
         flavor == Flavor::kGSPrime;
}

const std::vector<FormulationVariant>& all_variants() {
  static const std::vector<FormulationVariant> variants = [] {
    std::vector<FormulationVariant> out;
    for (const auto& e : kCatalog) out.push_back({e.family, e.flavor, false});
    return out;
  }();
  return variants;
}

LinExpr OwaModel::z_expr(int i, int j) const {
  if (variant.uses_s()) {
    LinExpr e;
    if (j + 1 < p) {
      e.add(s_expr(i, j + 1));
      e.add(s_expr(i, j), -1.0);
    } else {
      e.add_constant(1.0);
      e.add(s_expr(i, j), -1.0);
    }
    return e;
  }
  const int v = perm_var(i, j);
  if (v >= 0) return LinExpr::var(v);
  LinExpr e(1.0);
  for (int k = 1; k < p; ++k) e.add(perm_var(i, k), -1.0);
  return e;
}

LinExpr OwaModel::s_expr(int i, int j) const {
  if (variant.uses_s()) {
    const int v = perm_var(i, j);
    return v >= 0 ? LinExpr::var(v) : LinExpr(0.0);
  }
  LinExpr e(1.0);
  e.add(z_tail_expr(i, j), -1.0);
  return e;
}

LinExpr OwaModel::z_tail_expr(int i, int j) const {
  if (variant.uses_s()) {
    LinExpr e(1.0);
    e.add(s_expr(i, j), -1.0);
    return e;
  }
  LinExpr e;
  for (int k = j; k < p; ++k) e.add(z_expr(i, k));
  return e;
}

LinExpr OwaModel::theta_expr(int j) const { return LinExpr::var(theta_vars[j]); }

LinExpr OwaModel::outcome_expr(int i) const {
  LinExpr e;
  for (int k = 0; k < n_design; ++k) {
    const double c = costs.value(i, k);
    if (c != 0.0) e.add(x_var(k), c);
  }
  return e;
}

namespace {

milp::Model relaxation_of_domain(const DomainSpec& dom) {
  milp::Model model;
  for (int k = 0; k < dom.n_design; ++k)
    model.add_variable(dom.design_names[k], milp::VarKind::kContinuous, 0.0, 1.0);
  for (int k = 0; k < dom.aux_count; ++k)
    model.add_variable(dom.aux_names[k], milp::VarKind::kContinuous,
                       dom.aux_lower[k], dom.aux_upper[k]);
  for (const auto& row : dom.constraints) model.add_constraint(row);
  return model;
}

double positive_row_sum(const CostMatrix& c, int i) {
  double s = 0.0;
  for (int k = 0; k < c.n(); ++k) s += std::max(0.0, c.value(i, k));
  return s;
}

// Largest C^i x over the LP relaxation, or nullopt when an LP fails.
std::optional<double> lp_outcome_max(const DomainSpec& dom, const CostMatrix& c) {
  const milp::Model model = relaxation_of_domain(dom);
  std::vector<double> lo, up;
  for (const auto& v : model.variables()) {
    lo.push_back(v.lower);
    up.push_back(v.upper);
  }
  double best = 0.0;
  for (int i = 0; i < c.p(); ++i) {
    LinExpr obj;
    for (int k = 0; k < c.n(); ++k) obj.add(k, c.value(i, k));
    const auto sol = milp::lp_optimize(model, obj, true, lo, up);
    if (sol.status != milp::LpStatus::kOptimal) return std::nullopt;
    best = std::max(best, sol.objective);
  }
  return best;
}

void check_big_m(const DomainSpec& dom, const CostMatrix& c, const Rational& m) {
  const double md = to_double(m);
  double cheap = 0.0;
  for (int i = 0; i < c.p(); ++i) cheap = std::max(cheap, positive_row_sum(c, i));
  if (md > cheap) return;
  if (auto lp = lp_outcome_max(dom, c); lp && md > *lp + 1e-9) return;
  // Exact check on small domains.
  Rational best = 0;
  bool any = false;
  try {
    for_each_point(
        dom,
        [&](const BinaryVector& x) {
          for (const auto& y : c.outcomes(x)) best = std::max(best, y);
          any = true;
        },
        200000);
  } catch (const EnumerationCapExceeded&) {
    throw Error("cannot certify big-M " + to_string(m) +
                " as a strict upper bound on the cost functions");
  }
  if (any && m <= best)
    throw Error("big-M " + to_string(m) + " is not strictly above the largest "
                "attainable cost value " + to_string(best));
}

}  // namespace

Rational big_m_default(const DomainSpec& dom, const CostMatrix& c) {
  double u = 0.0;
  if (auto lp = lp_outcome_max(dom, c)) {
    u = *lp;
  } else {
    for (int i = 0; i < c.p(); ++i) u = std::max(u, positive_row_sum(c, i));
  }
  const double rounded = std::ceil(std::max(0.0, u) - 1e-9);
  return Rational(Integer(static_cast<long long>(rounded))) + 1;
}

void add_theta_upper_rows(OwaModel& m) {
  const double big = to_double(m.big_m);
  for (int i = 0; i < m.p; ++i) {
    for (int j = 0; j < m.p; ++j) {
      LinExpr rhs = m.outcome_expr(i);
      rhs.add_constant(big);
      rhs.add(m.z_expr(i, j), -big);
      m.model.add_row(m.theta_expr(j), Sense::kLessEqual, rhs, "cotazy",
                      "cotazy" + index_suffix({i, j}), {i, j});
    }
  }
}

OwaModel build(const FormulationVariant& variant, const DomainSpec& dom,
               const CostMatrix& c, const WeightVector& omega,
               const Rational& big_m, const BuildOptions& options) {
  if (!variant.is_cataloged()) throw Error("unknown formulation variant");
  if (variant.reduced_first_column && !variant.supports_reduction())
    throw Error("variant " + variant.name() + " has no reduced build");
  if (c.n() != dom.n_design)
    throw DimensionError("cost matrix has " + std::to_string(c.n()) +
                         " columns but the domain has " +
                         std::to_string(dom.n_design) + " design variables");
  if (omega.size() != c.p())
    throw DimensionError("weight vector length differs from p");
  if (omega.has_negative()) {
    if (!options.signed_extension)
      throw Error("signed weights need the theta upper-bound extension");
    if (!variant.keeps_ordering())
      throw Error("signed weights are not supported by " + variant.name());
  }
  if (big_m <= 0) throw Error("big-M must be positive");
  check_big_m(dom, c, big_m);

  OwaModel m;
  m.variant = variant;
  m.big_m = big_m;
  m.costs = c;
  m.weights = omega;
  m.p = c.p();
  m.n_design = dom.n_design;
  m.aux_count = dom.aux_count;
  m.model.name = variant.name();
  const int p = m.p;
  const bool reduced = variant.reduced_first_column;
  const bool has_y = variant.has_y();
  const double big = to_double(big_m);

  auto& model = m.model;
  for (int k = 0; k < dom.n_design; ++k)
    model.add_variable(dom.design_names[k], milp::VarKind::kBinary, 0.0, 1.0);
  for (int k = 0; k < dom.aux_count; ++k)
    model.add_variable(dom.aux_names[k], milp::VarKind::kContinuous,
                       dom.aux_lower[k], dom.aux_upper[k]);
  const char* perm_prefix = variant.uses_s() ? "s" : "z";
  m.perm_vars.assign(std::size_t(p) * p, -1);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      if (reduced && j == 0) continue;
      m.perm_vars[std::size_t(i) * p + j] = model.add_variable(
          perm_prefix + index_suffix({i, j}), milp::VarKind::kBinary, 0.0, 1.0);
    }
  }
  if (has_y) {
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j)
        m.y_vars.push_back(model.add_variable("y" + index_suffix({i, j}),
                                              milp::VarKind::kContinuous, 0.0,
                                              milp::kInf));
    }
  }
  for (int j = 0; j < p; ++j)
    m.theta_vars.push_back(model.add_variable("theta" + index_suffix({j}),
                                              milp::VarKind::kContinuous, 0.0,
                                              milp::kInf));

  for (const auto& row : dom.constraints) model.add_constraint(row);

  LinExpr objective;
  for (int j = 0; j < p; ++j) objective.add(m.theta_vars[j], to_double(omega.omega[j]));
  model.set_objective(objective);
  const Integer grid = common_denominator(c.entries()) *
                       common_denominator(omega.omega);
  model.set_objective_step(1.0 / grid.convert_to<double>());

  auto add = [&](const LinExpr& lhs, Sense sense, const LinExpr& rhs,
                 const std::string& tag, std::initializer_list<int> idx) {
    model.add_row(lhs, sense, rhs, tag, tag + index_suffix(idx),
                  std::vector<int>(idx));
  };
  // Value sitting at position j: theta_j, or sum_i y_ij in the y families.
  auto position_value = [&](int j) {
    if (!has_y) return m.theta_expr(j);
    LinExpr e;
    for (int i = 0; i < p; ++i) e.add(m.y_var(i, j), 1.0);
    return e;
  };
  const Flavor fl = variant.flavor;
  const bool zy = has_y;

  if (variant.family == Family::kS) {
    for (int j = 0; j < p; ++j) {
      if (reduced && j == 0) continue;
      LinExpr col;
      for (int i = 0; i < p; ++i) col.add(m.s_expr(i, j));
      if (fl == Flavor::kR3)
        add(col, Sense::kLessEqual, LinExpr(j), "owa3b<=", {j});
      else
        add(col, Sense::kEqual, LinExpr(j), reduced ? "permutations21" : "owa3b",
            {j});
    }
    if (fl == Flavor::kBase || fl == Flavor::kR1) {
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j + 1 < p; ++j) {
          if (reduced && j == 0) continue;
          LinExpr diff = m.s_expr(i, j + 1);
          diff.add(m.s_expr(i, j), -1.0);
          add(diff, Sense::kGreaterEqual, LinExpr(0.0),
              reduced ? "permutations22" : "owa3c", {i, j});
        }
      }
    }
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        LinExpr rhs = m.theta_expr(j);
        rhs.add(m.s_expr(i, j), big);
        add(m.outcome_expr(i), Sense::kLessEqual, rhs, "owa3d", {i, j});
      }
    }
    if (fl == Flavor::kBase) {
      for (int j = 0; j + 1 < p; ++j)
        add(m.theta_expr(j), Sense::kGreaterEqual, m.theta_expr(j + 1), "owa3e",
            {j});
    }
  } else {
    const bool gs = variant.family == Family::kGS;
    // Column sums.
    for (int j = 0; j < p; ++j) {
      if (reduced && j == 0) continue;
      LinExpr col;
      for (int i = 0; i < p; ++i) col.add(m.z_expr(i, j));
      if (fl == Flavor::kR3) {
        add(col, Sense::kLessEqual, LinExpr(1.0), zy ? "owa2b<=" : "owab<=", {j});
      } else {
        add(col, Sense::kEqual, LinExpr(1.0),
            reduced ? "permutationz21" : (zy ? "owa2b" : "owab"), {j});
      }
    }
    // Row sums.
    if (fl == Flavor::kBase0 || fl == Flavor::kBase || fl == Flavor::kR1 || gs) {
      for (int i = 0; i < p; ++i) {
        LinExpr row;
        if (reduced) {
          for (int j = 1; j < p; ++j) row.add(m.perm_var(i, j), 1.0);
          add(row, Sense::kLessEqual, LinExpr(1.0), "permutationz22", {i});
        } else {
          for (int j = 0; j < p; ++j) row.add(m.z_expr(i, j));
          add(row, Sense::kEqual, LinExpr(1.0), zy ? "owa2c" : "owac", {i});
        }
      }
    }
    // Linking rows between outcomes and positions.
    const bool d0 = fl == Flavor::kBase0 || (gs && fl == Flavor::kGSPrime);
    const bool d = !gs && (fl == Flavor::kBase || fl == Flavor::kR1 ||
                           fl == Flavor::kR2);
    const bool dprime = fl == Flavor::kR3;
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        LinExpr rhs = position_value(j);
        std::string tag;
        if (d0) {
          tag = zy ? "owa2d0" : "owad0";
          if (!(reduced && j == 0)) {
            rhs.add_constant(big);
            rhs.add(m.z_expr(i, j), -big);
          }
        } else if (d) {
          tag = zy ? "owa2d" : "owad";
          rhs.add_constant(big);
          rhs.add(m.z_tail_expr(i, j), -big);
        } else if (dprime) {
          tag = zy ? "owa2d'" : "owad'";
          for (int k = 0; k < j; ++k) rhs.add(m.z_expr(i, k), big);
        } else {
          continue;
        }
        add(m.outcome_expr(i), Sense::kLessEqual, rhs, tag, {i, j});
      }
    }
    if (fl == Flavor::kBase0 || fl == Flavor::kBase || gs) {
      for (int j = 0; j + 1 < p; ++j)
        add(position_value(j), Sense::kGreaterEqual, position_value(j + 1),
            zy ? "owa2e" : "owae", {j});
    }
    if (gs) {
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
          LinExpr rhs;
          rhs.add(m.z_expr(i, j), big);
          add(LinExpr::var(m.y_var(i, j)), Sense::kLessEqual, rhs, "owa2g", {i, j});
        }
      }
      if (fl == Flavor::kBase) {
        for (int i = 0; i < p; ++i) {
          LinExpr sum;
          for (int j = 0; j < p; ++j) sum.add(m.y_var(i, j), 1.0);
          add(sum, Sense::kEqual, m.outcome_expr(i), "owa2h", {i});
        }
      }
    }
  }

  if (has_y) {
    for (int j = 0; j < p; ++j)
      add(m.theta_expr(j), Sense::kEqual, position_value(j), "relOWAP1OWAP2", {j});
  }
  if (options.signed_extension) add_theta_upper_rows(m);
  return m;
}

std::vector<double> canonical_lift(const OwaModel& m, const DomainSpec& dom,
                                   const BinaryVector& x) {
  if (static_cast<int>(x.size()) != m.n_design)
    throw DimensionError("design vector length differs from the model");
  const auto aux = complete_aux(dom, x);
  if (!aux) throw InvariantError("design vector is not in Q");
  std::vector<double> values(m.model.num_variables(), 0.0);
  for (int k = 0; k < m.n_design; ++k) values[m.x_var(k)] = x[k];
  for (int k = 0; k < m.aux_count; ++k) values[m.aux_var(k)] = (*aux)[k];

  const OutcomeVector y = m.costs.outcomes(x);
  const SortedOutcomes sorted = sort_outcomes(y);
  const auto& pi = sorted.order.pi();
  for (int i = 0; i < m.p; ++i) {
    for (int j = 0; j < m.p; ++j) {
      const int v = m.perm_var(i, j);
      if (v < 0) continue;
      values[v] = m.variant.uses_s() ? (j > pi[i] ? 1.0 : 0.0)
                                     : (j == pi[i] ? 1.0 : 0.0);
    }
    if (m.variant.has_y()) values[m.y_var(i, pi[i])] = to_double(y[i]);
  }
  for (int j = 0; j < m.p; ++j) values[m.theta_vars[j]] = to_double(sorted.sorted[j]);

  for (const auto& row : m.model.constraints()) {
    if (row.violation(values) > 1e-6)
      throw InvariantError("canonical lift violates " + row.name);
  }
  return values;
}

std::map<std::string, bool> domain_membership(const OwaModel& m,
                                              const std::vector<double>& point,
                                              double tol) {
  if (static_cast<int>(point.size()) != m.model.num_variables())
    throw DimensionError("point length differs from the model");
  std::map<std::string, bool> out;
  bool bounds = true, integral = true;
  const auto& vars = m.model.variables();
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (point[k] < vars[k].lower - tol || point[k] > vars[k].upper + tol)
      bounds = false;
    if (vars[k].kind == milp::VarKind::kBinary &&
        std::fabs(point[k] - std::round(point[k])) > tol)
      integral = false;
  }
  out["bounds"] = bounds;
  out["integrality"] = integral;
  for (const auto& row : m.model.constraints()) {
    auto [it, inserted] = out.try_emplace(row.tag, true);
    if (row.violation(point) > tol) it->second = false;
  }
  return out;
}

bool is_member(const OwaModel& m, const std::vector<double>& point, double tol) {
  for (const auto& [tag, ok] : domain_membership(m, point, tol)) {
    if (!ok) return false;
  }
  return true;
}

BinaryVector design_of(const OwaModel& m, const std::vector<double>& values) {
  BinaryVector x(m.n_design, 0);
  for (int k = 0; k < m.n_design; ++k)
    x[k] = values[m.x_var(k)] > 0.5 ? 1 : 0;
  return x;
}

std::vector<double> theta_values(const OwaModel& m,
                                 const std::vector<double>& values) {
  std::vector<double> out;
  for (int v : m.theta_vars) out.push_back(values[v]);
  return out;
}

std::vector<double> theta_display(const OwaModel& m,
                                  const std::vector<double>& values) {
  auto out = theta_values(m, values);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace owa
