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

#include "owa/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "owa/errors.hpp"
#include "owa/milp/lp.hpp"

namespace owa {

using milp::LinExpr;
using milp::Sense;

namespace {

constexpr double kPosInf = std::numeric_limits<double>::infinity();

struct CutInfo {
  CutFamily family;
  const char* label;
};

constexpr CutInfo kCuts[] = {
    {CutFamily::kCotaiInf1, "cotai_inf.1"},
    {CutFamily::kCotaiInf2, "cotai_inf.2"},
    {CutFamily::kCotaiInfOrd1, "cotai_inf_ord.1"},
    {CutFamily::kCotaiInfOrd2, "cotai_inf_ord.2"},
    {CutFamily::kCotaiUij1, "cotai_uij.1"},
    {CutFamily::kCotaiUij2, "cotai_uij.2"},
    {CutFamily::kCotajUij1, "cotaj_uij.1"},
    {CutFamily::kCotajUij2, "cotaj_uij.2"},
    {CutFamily::kCotaiUijMax1, "cotai_uij_max.1"},
    {CutFamily::kCotaiUijMax2, "cotai_uij_max.2"},
    {CutFamily::kCotajUijMax1, "cotaj_uij_max.1"},
    {CutFamily::kCotajUijMax2, "cotaj_uij_max.2"},
    {CutFamily::kCotazy, "cotazy"},
    {CutFamily::kValidOrdering, "validordering"},
    {CutFamily::kValidSubsets1, "validsubsets.1"},
    {CutFamily::kValidSubsets2, "validsubsets.2"},
    {CutFamily::kValidSubsets3, "validsubsets.3"},
    {CutFamily::kValidSubsets4, "validsubsets.4"},
    {CutFamily::kOwa2eq, "owa2eq"},
    {CutFamily::kCotayydis1, "cotayydis1"},
    {CutFamily::kCotayydis2, "cotayydis2"},
    {CutFamily::kYyrel1, "yyrel1"},
    {CutFamily::kYyrel2, "yyrel2"},
    {CutFamily::kYyrel3, "yyrel3"},
};

std::vector<double> kth_largest(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

void finish_table(BoundTable& t) {
  const int p = t.p;
  t.l.assign(p, kPosInf);
  t.u.assign(p, -kPosInf);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      t.l[i] = std::min(t.l[i], t.at(t.L, i, j));
      t.u[i] = std::max(t.u[i], t.at(t.U, i, j));
    }
  }
  t.l_pi = kth_largest(t.l);
  t.u_pi = kth_largest(t.u);
}

BoundTable enumeration_bounds(const DomainSpec& dom, const CostMatrix& c,
                              const WeightVector& omega) {
  const int p = c.p();
  BoundTable t;
  t.p = p;
  t.method = BoundMethod::kEnumeration;
  const std::size_t cells = std::size_t(p) * p;
  t.L.assign(cells, kPosInf);
  t.U.assign(cells, -kPosInf);
  t.L1.assign(cells, kPosInf);
  t.L0.assign(cells, kPosInf);
  for_each_point(dom, [&](const BinaryVector& x) {
    const OutcomeVector y = c.outcomes(x);
    const double value = to_double(owa_of_outcomes(y, omega));
    for (int i = 0; i < p; ++i) {
      int gt = 0, ge = 0;
      for (int k = 0; k < p; ++k) {
        if (y[k] > y[i]) ++gt;
        if (y[k] >= y[i]) ++ge;
      }
      const double yi = to_double(y[i]);
      // Objective i can be sorted into any position in [gt, ge).
      for (int j = 0; j < p; ++j) {
        const std::size_t cell = std::size_t(i) * p + j;
        const bool can_sit = gt <= j && j < ge;
        if (can_sit) {
          t.L[cell] = std::min(t.L[cell], yi);
          t.U[cell] = std::max(t.U[cell], yi);
          t.L1[cell] = std::min(t.L1[cell], value);
        }
        if (!(gt == j && ge == j + 1)) t.L0[cell] = std::min(t.L0[cell], value);
      }
    }
  });
  finish_table(t);
  return t;
}

BoundTable lp_bounds(const DomainSpec& dom, const CostMatrix& c,
                     const WeightVector& omega) {
  const int p = c.p();
  BoundTable t;
  t.p = p;
  t.method = BoundMethod::kLpRelaxation;
  const std::size_t cells = std::size_t(p) * p;
  t.L.assign(cells, kPosInf);
  t.U.assign(cells, -kPosInf);
  t.L1.assign(cells, kPosInf);
  t.L0.assign(cells, kPosInf);
  WeightVector w = omega;
  w.signed_allowed = true;
  const OwaModel m = build({Family::kZ, Flavor::kBase, false}, dom, c, w,
                           big_m_default(dom, c),
                           BuildOptions{omega.has_negative()});
  std::vector<double> lo, up;
  for (const auto& v : m.model.variables()) {
    lo.push_back(v.lower);
    up.push_back(v.upper);
  }
  LinExpr owa_obj;
  for (const auto& term : m.model.objective()) owa_obj.add(term.var, term.coef);
  for (int i = 0; i < p; ++i) {
    const LinExpr outcome = m.outcome_expr(i);
    for (int j = 0; j < p; ++j) {
      const std::size_t cell = std::size_t(i) * p + j;
      const int z = m.perm_var(i, j);
      auto lo1 = lo, up1 = up;
      lo1[z] = up1[z] = 1.0;
      const auto mn = milp::lp_optimize(m.model, outcome, false, lo1, up1);
      if (mn.status == milp::LpStatus::kOptimal) {
        t.L[cell] = mn.objective;
        const auto mx = milp::lp_optimize(m.model, outcome, true, lo1, up1);
        if (mx.status == milp::LpStatus::kOptimal) t.U[cell] = mx.objective;
        const auto ob = milp::lp_optimize(m.model, owa_obj, false, lo1, up1);
        if (ob.status == milp::LpStatus::kOptimal) t.L1[cell] = ob.objective;
      }
      auto lo0 = lo, up0 = up;
      lo0[z] = up0[z] = 0.0;
      const auto o0 = milp::lp_optimize(m.model, owa_obj, false, lo0, up0);
      if (o0.status == milp::LpStatus::kOptimal) t.L0[cell] = o0.objective;
    }
  }
  finish_table(t);
  return t;
}

}  // namespace

const char* to_string(BoundMethod method) {
  return method == BoundMethod::kEnumeration ? "enumeration" : "lp-relaxation";
}

double BoundTable::l_cell(int i, int j) const {
  const double v = at(L, i, j);
  return std::isfinite(v) ? v : 0.0;
}

double BoundTable::u_cell(int i, int j) const {
  const double v = at(U, i, j);
  return std::isfinite(v) ? std::max(v, 0.0) : 0.0;
}

BoundTable compute_bounds(const DomainSpec& dom, const CostMatrix& c,
                          const WeightVector& omega, BoundMethod method) {
  if (c.n() != dom.n_design)
    throw DimensionError("cost matrix and domain disagree on n");
  if (omega.size() != c.p()) throw DimensionError("weight vector length != p");
  return method == BoundMethod::kEnumeration ? enumeration_bounds(dom, c, omega)
                                             : lp_bounds(dom, c, omega);
}

const char* label(CutFamily family) {
  for (const auto& c : kCuts) {
    if (c.family == family) return c.label;
  }
  return "?";
}

CutFamily parse_cut(const std::string& text) {
  for (const auto& c : kCuts) {
    if (text == c.label) return c.family;
  }
  throw Error("unknown cut family '" + text + "'");
}

const std::vector<CutFamily>& all_cut_families() {
  static const std::vector<CutFamily> all = [] {
    std::vector<CutFamily> out;
    for (const auto& c : kCuts) out.push_back(c.family);
    return out;
  }();
  return all;
}

std::vector<CutFamily> default_cut_families(const FormulationVariant& v) {
  std::vector<CutFamily> out;
  for (CutFamily f : all_cut_families()) {
    if (f != CutFamily::kCotazy && compatible(f, v)) out.push_back(f);
  }
  return out;
}

bool needs_y(CutFamily family) {
  switch (family) {
    case CutFamily::kOwa2eq:
    case CutFamily::kCotayydis1:
    case CutFamily::kCotayydis2:
    case CutFamily::kYyrel1:
    case CutFamily::kYyrel2:
    case CutFamily::kYyrel3:
      return true;
    default:
      return false;
  }
}

bool compatible(CutFamily family, const FormulationVariant& variant) {
  return variant.is_cataloged() && (!needs_y(family) || variant.has_y());
}

void add_cut(OwaModel& m, CutFamily family, const BoundTable& b) {
  if (!compatible(family, m.variant))
    throw Error(std::string("cut family ") + label(family) +
                " needs y variables, which " + m.variant.name() + " lacks");
  if (b.p != m.p) throw DimensionError("bound table size differs from p");
  const int p = m.p;
  const std::string tag = label(family);
  auto add = [&](const LinExpr& lhs, Sense sense, const LinExpr& rhs,
                 std::vector<int> idx) {
    std::string name = tag;
    for (int k : idx) name += "_" + std::to_string(k + 1);
    m.model.add_row(lhs, sense, rhs, tag, name, std::move(idx));
  };
  auto y = [&](int i, int j) { return LinExpr::var(m.y_var(i, j)); };
  auto min_l_over_j = [&](int i) {
    double v = kPosInf;
    for (int j = 0; j < p; ++j) v = std::min(v, b.at(b.L, i, j));
    return std::isfinite(v) ? v : 0.0;
  };
  auto max_u_over_j = [&](int i) {
    double v = -kPosInf;
    for (int j = 0; j < p; ++j) v = std::max(v, b.at(b.U, i, j));
    return std::isfinite(v) ? v : 0.0;
  };
  auto subset = [&](const std::vector<int>& members, std::vector<int> idx) {
    LinExpr lhs, rhs;
    for (int i : members) lhs.add(m.outcome_expr(i));
    for (int j = 0; j < static_cast<int>(members.size()); ++j)
      rhs.add(m.theta_expr(j));
    add(lhs, Sense::kLessEqual, rhs, std::move(idx));
  };

  switch (family) {
    case CutFamily::kCotaiInf1:
      for (int i = 0; i < p; ++i)
        add(m.outcome_expr(i), Sense::kGreaterEqual, LinExpr(b.l[i]), {i});
      break;
    case CutFamily::kCotaiInf2:
      for (int i = 0; i < p; ++i)
        add(m.outcome_expr(i), Sense::kLessEqual, LinExpr(b.u[i]), {i});
      break;
    case CutFamily::kCotaiInfOrd1:
      for (int j = 0; j < p; ++j)
        add(m.theta_expr(j), Sense::kGreaterEqual, LinExpr(b.l_pi[j]), {j});
      break;
    case CutFamily::kCotaiInfOrd2:
      for (int j = 0; j < p; ++j)
        add(m.theta_expr(j), Sense::kLessEqual, LinExpr(b.u_pi[j]), {j});
      break;
    case CutFamily::kCotaiUij1:
      for (int i = 0; i < p; ++i)
        add(m.outcome_expr(i), Sense::kGreaterEqual, LinExpr(min_l_over_j(i)), {i});
      break;
    case CutFamily::kCotaiUij2:
      for (int i = 0; i < p; ++i)
        add(m.outcome_expr(i), Sense::kLessEqual, LinExpr(max_u_over_j(i)), {i});
      break;
    case CutFamily::kCotajUij1:
      for (int j = 0; j < p; ++j) {
        double v = kPosInf;
        for (int i = 0; i < p; ++i) v = std::min(v, b.at(b.L, i, j));
        add(m.theta_expr(j), Sense::kGreaterEqual,
            LinExpr(std::isfinite(v) ? v : 0.0), {j});
      }
      break;
    case CutFamily::kCotajUij2:
      for (int j = 0; j < p; ++j) {
        double v = -kPosInf;
        for (int i = 0; i < p; ++i) v = std::max(v, b.at(b.U, i, j));
        add(m.theta_expr(j), Sense::kLessEqual,
            LinExpr(std::isfinite(v) ? v : 0.0), {j});
      }
      break;
    case CutFamily::kCotaiUijMax1:
    case CutFamily::kCotaiUijMax2:
      for (int i = 0; i < p; ++i) {
        LinExpr sum;
        for (int j = 0; j < p; ++j) {
          const double coef = family == CutFamily::kCotaiUijMax1
                                  ? std::max(b.l[i], b.l_pi[j])
                                  : std::min(b.u[i], b.u_pi[j]);
          sum.add(m.z_expr(i, j), coef);
        }
        if (family == CutFamily::kCotaiUijMax1)
          add(sum, Sense::kLessEqual, m.outcome_expr(i), {i});
        else
          add(m.outcome_expr(i), Sense::kLessEqual, sum, {i});
      }
      break;
    case CutFamily::kCotajUijMax1:
    case CutFamily::kCotajUijMax2:
      for (int j = 0; j < p; ++j) {
        LinExpr sum;
        for (int i = 0; i < p; ++i) {
          const double coef = family == CutFamily::kCotajUijMax1
                                  ? std::max(b.l[i], b.l_pi[j])
                                  : std::min(b.u[i], b.u_pi[j]);
          sum.add(m.z_expr(i, j), coef);
        }
        if (family == CutFamily::kCotajUijMax1)
          add(sum, Sense::kLessEqual, m.theta_expr(j), {j});
        else
          add(m.theta_expr(j), Sense::kLessEqual, sum, {j});
      }
      break;
    case CutFamily::kCotazy:
      add_theta_upper_rows(m);
      break;
    case CutFamily::kValidOrdering:
      for (int j = 0; j + 1 < p; ++j)
        add(m.theta_expr(j), Sense::kGreaterEqual, m.theta_expr(j + 1), {j});
      break;
    case CutFamily::kValidSubsets1:
      for (int i = 0; i < p; ++i) subset({i}, {i});
      break;
    case CutFamily::kValidSubsets2:
      for (int i = 0; i < p; ++i) {
        for (int k = i + 1; k < p; ++k) subset({i, k}, {i, k});
      }
      break;
    case CutFamily::kValidSubsets3:
      for (int i = 0; i < p; ++i) {
        std::vector<int> rest;
        for (int k = 0; k < p; ++k) {
          if (k != i) rest.push_back(k);
        }
        if (!rest.empty()) subset(rest, {i});
      }
      break;
    case CutFamily::kValidSubsets4: {
      std::vector<int> all(p);
      for (int i = 0; i < p; ++i) all[i] = i;
      subset(all, {});
      break;
    }
    case CutFamily::kOwa2eq:
      for (int i = 0; i < p; ++i) {
        LinExpr sum;
        for (int j = 0; j < p; ++j) sum.add(y(i, j));
        add(sum, Sense::kEqual, m.outcome_expr(i), {i});
      }
      break;
    case CutFamily::kCotayydis1:
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
          const double coef = std::min(b.u[i], b.u_pi[j]);
          LinExpr rhs;
          for (int k = 0; k < p; ++k) rhs.add(y(k, j));
          rhs.add_constant(coef);
          rhs.add(m.z_tail_expr(i, j), -coef);
          add(y(i, j), Sense::kLessEqual, rhs, {i, j});
        }
      }
      break;
    case CutFamily::kCotayydis2:
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
          LinExpr rhs = y(i, j);
          rhs.add_constant(b.u[i]);
          rhs.add(m.z_expr(i, j), -b.u[i]);
          add(m.outcome_expr(i), Sense::kLessEqual, rhs, {i, j});
        }
      }
      break;
    case CutFamily::kYyrel1:
      for (int i = 0; i < p; ++i) {
        for (int i2 = 0; i2 < p; ++i2) {
          if (i2 == i) continue;
          for (int j = 0; j + 1 < p; ++j) {
            LinExpr lhs;
            for (int k = j + 1; k < p; ++k) lhs.add(y(i, k));
            LinExpr rhs = y(i2, j);
            rhs.add_constant(b.u[i]);
            rhs.add(m.z_expr(i2, j), -b.u[i]);
            rhs.add(m.z_expr(i, j), -b.u[i]);
            add(lhs, Sense::kLessEqual, rhs, {i, i2, j});
          }
        }
      }
      break;
    case CutFamily::kYyrel2:
    case CutFamily::kYyrel3:
      for (int i = 0; i < p; ++i) {
        for (int i2 = 0; i2 < p; ++i2) {
          if (i2 == i) continue;
          for (int j = 0; j + 1 < p; ++j) {
            // Coefficient on (1 - z_{i,j+1}) bounds the value of i2 at j,
            // the one on (1 - z_{i2,j}) bounds the value of i at j+1.
            double a, c;
            if (family == CutFamily::kYyrel2) {
              a = b.u_cell(i2, j);
              c = b.u_cell(i, j + 1);
            } else {
              a = std::min(b.u[i2], b.u_pi[j]);
              c = std::min(b.u[i], b.u_pi[j + 1]);
            }
            LinExpr rhs = y(i2, j);
            rhs.add_constant(a + c);
            rhs.add(m.z_expr(i, j + 1), -a);
            rhs.add(m.z_expr(i2, j), -c);
            add(y(i, j + 1), Sense::kLessEqual, rhs, {i, i2, j});
          }
        }
      }
      break;
  }
}

OwaModel apply_cut(OwaModel m, CutFamily family, const BoundTable& bounds) {
  add_cut(m, family, bounds);
  return m;
}

std::vector<Fixing> elimination_tests(const BoundTable& b, double incumbent) {
  std::vector<Fixing> out;
  if (!std::isfinite(incumbent)) return out;
  const double tol = 1e-6 * std::max(1.0, std::fabs(incumbent));
  for (int i = 0; i < b.p; ++i) {
    for (int j = 0; j < b.p; ++j) {
      if (b.at(b.L1, i, j) > incumbent + tol)
        out.push_back({i, j, 0});
      else if (b.at(b.L0, i, j) > incumbent + tol)
        out.push_back({i, j, 1});
    }
  }
  return out;
}

void apply_fixings(OwaModel& m, const std::vector<Fixing>& fixings) {
  for (const auto& f : fixings) {
    const LinExpr z = m.z_expr(f.i, f.j);
    const auto terms = z.terms();
    if (terms.size() == 1 && terms.front().coef == 1.0 && z.constant() == 0.0) {
      const int v = terms.front().var;
      const auto& var = m.model.variables()[v];
      const double lo = std::max(var.lower, double(f.value));
      const double hi = std::min(var.upper, double(f.value));
      m.model.set_bounds(v, lo, hi);
    } else {
      m.model.add_row(z, Sense::kEqual, LinExpr(double(f.value)), "fixing",
                      "fixing_" + std::to_string(f.i + 1) + "_" +
                          std::to_string(f.j + 1),
                      {f.i, f.j});
    }
  }
}

}  // namespace owa
