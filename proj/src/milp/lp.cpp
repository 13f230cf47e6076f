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

#include "owa/milp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "owa/errors.hpp"

namespace owa::milp {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "?";
}

namespace {

enum class ColState : std::uint8_t { kBasic, kLower, kUpper, kFree };

// Dense tableau over the columns [structurals | row logicals | artificials].
// Row r of the tableau reads x_head(r) + sum_{j nonbasic} T(r,j) x_j = 0, and
// the logical of row r equals the row activity a_r x.
class DenseSimplex {
 public:
  DenseSimplex(const Model& model, std::span<const double> lower,
               std::span<const double> upper, const LpOptions& options)
      : opt_(options),
        m_(model.num_constraints()),
        n_(model.num_variables()) {
    std::vector<double> activity(m_, 0.0);
    lo_.assign(n_ + m_, 0.0);
    up_.assign(n_ + m_, 0.0);
    x_.assign(n_ + m_, 0.0);
    state_.assign(n_ + m_, ColState::kLower);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = lower[j];
      up_[j] = upper[j];
      if (std::isfinite(lo_[j])) {
        x_[j] = lo_[j];
        state_[j] = ColState::kLower;
      } else if (std::isfinite(up_[j])) {
        x_[j] = up_[j];
        state_[j] = ColState::kUpper;
      } else {
        x_[j] = 0.0;
        state_[j] = ColState::kFree;
      }
    }
    const auto& rows = model.constraints();
    for (int r = 0; r < m_; ++r) {
      const auto& row = rows[r];
      const int s = n_ + r;
      lo_[s] = row.sense == Sense::kLessEqual ? -kInf : row.rhs;
      up_[s] = row.sense == Sense::kGreaterEqual ? kInf : row.rhs;
      for (const auto& t : row.terms) activity[r] += t.coef * x_[t.var];
    }
    std::vector<int> art_row;
    for (int r = 0; r < m_; ++r) {
      const int s = n_ + r;
      if (activity[r] < lo_[s] - opt_.feas_tol ||
          activity[r] > up_[s] + opt_.feas_tol)
        art_row.push_back(r);
    }
    first_art_ = n_ + m_;
    ncols_ = first_art_ + static_cast<int>(art_row.size());
    lo_.resize(ncols_, 0.0);
    up_.resize(ncols_, kInf);
    x_.resize(ncols_, 0.0);
    state_.resize(ncols_, ColState::kLower);
    tab_.assign(std::size_t(m_) * ncols_, 0.0);
    head_.assign(m_, -1);

    std::vector<int> art_of_row(m_, -1);
    for (std::size_t k = 0; k < art_row.size(); ++k)
      art_of_row[art_row[k]] = first_art_ + static_cast<int>(k);

    for (int r = 0; r < m_; ++r) {
      const int s = n_ + r;
      double* t = row_ptr(r);
      const int art = art_of_row[r];
      if (art < 0) {
        for (const auto& term : rows[r].terms) t[term.var] -= term.coef;
        t[s] = 1.0;
        head_[r] = s;
        state_[s] = ColState::kBasic;
        x_[s] = activity[r];
        continue;
      }
      const bool above = activity[r] > up_[s];
      const double bound = above ? up_[s] : lo_[s];
      const double sign = above ? 1.0 : -1.0;
      for (const auto& term : rows[r].terms) t[term.var] -= term.coef / sign;
      t[s] = 1.0 / sign;
      t[art] = 1.0;
      head_[r] = art;
      state_[art] = ColState::kBasic;
      x_[s] = bound;
      state_[s] = above ? ColState::kUpper : ColState::kLower;
      x_[art] = (activity[r] - bound) / sign;
    }
  }

  LpStatus solve(const std::vector<double>& structural_cost) {
    if (ncols_ > first_art_) {
      std::vector<double> phase1(ncols_, 0.0);
      for (int j = first_art_; j < ncols_; ++j) phase1[j] = 1.0;
      const LpStatus st = iterate(phase1);
      if (st == LpStatus::kIterationLimit) return st;
      double infeasibility = 0.0;
      for (int j = first_art_; j < ncols_; ++j) infeasibility += x_[j];
      if (infeasibility > 1e-6) return LpStatus::kInfeasible;
      retire_artificials();
    }
    std::vector<double> cost(ncols_, 0.0);
    std::copy(structural_cost.begin(), structural_cost.end(), cost.begin());
    return iterate(cost);
  }

  std::vector<double> structural_values() const {
    std::vector<double> v(x_.begin(), x_.begin() + n_);
    for (int j = 0; j < n_; ++j) {
      // Snap tiny bound overshoots introduced by round-off.
      if (std::isfinite(lo_[j]) && v[j] < lo_[j]) v[j] = lo_[j];
      if (std::isfinite(up_[j]) && v[j] > up_[j]) v[j] = up_[j];
    }
    return v;
  }

  long iterations() const { return iterations_; }

 private:
  double* row_ptr(int r) { return tab_.data() + std::size_t(r) * ncols_; }
  const double* row_ptr(int r) const {
    return tab_.data() + std::size_t(r) * ncols_;
  }

  void compute_reduced_costs(const std::vector<double>& cost) {
    d_ = cost;
    for (int r = 0; r < m_; ++r) {
      const double cb = cost[head_[r]];
      if (cb == 0.0) continue;
      const double* t = row_ptr(r);
      for (int j = 0; j < ncols_; ++j) d_[j] -= cb * t[j];
    }
  }

  void recompute_basic_values() {
    for (int r = 0; r < m_; ++r) {
      const double* t = row_ptr(r);
      double v = 0.0;
      for (int j = 0; j < ncols_; ++j) {
        if (state_[j] != ColState::kBasic && t[j] != 0.0) v -= t[j] * x_[j];
      }
      x_[head_[r]] = v;
    }
  }

  void pivot(int r, int q) {
    double* pr = row_ptr(r);
    const double inv = 1.0 / pr[q];
    for (int j = 0; j < ncols_; ++j) pr[j] *= inv;
    pr[q] = 1.0;
    for (int k = 0; k < m_; ++k) {
      if (k == r) continue;
      double* pk = row_ptr(k);
      const double f = pk[q];
      if (f == 0.0) continue;
      for (int j = 0; j < ncols_; ++j) pk[j] -= f * pr[j];
      pk[q] = 0.0;
    }
    const double fd = d_[q];
    if (fd != 0.0) {
      for (int j = 0; j < ncols_; ++j) d_[j] -= fd * pr[j];
      d_[q] = 0.0;
    }
    head_[r] = q;
  }

  LpStatus iterate(const std::vector<double>& cost) {
    compute_reduced_costs(cost);
    int degenerate_run = 0;
    long since_refresh = 0;
    for (;;) {
      if (iterations_ >= opt_.max_iterations) return LpStatus::kIterationLimit;
      const bool bland = degenerate_run > 50;
      int q = -1;
      double dir = 0.0;
      double best = 0.0;
      for (int j = 0; j < ncols_; ++j) {
        const ColState st = state_[j];
        if (st == ColState::kBasic || lo_[j] == up_[j]) continue;
        double score = 0.0;
        double jdir = 0.0;
        if (st == ColState::kLower && d_[j] < -opt_.opt_tol) {
          score = -d_[j];
          jdir = 1.0;
        } else if (st == ColState::kUpper && d_[j] > opt_.opt_tol) {
          score = d_[j];
          jdir = -1.0;
        } else if (st == ColState::kFree && std::fabs(d_[j]) > opt_.opt_tol) {
          score = std::fabs(d_[j]);
          jdir = d_[j] < 0 ? 1.0 : -1.0;
        }
        if (jdir == 0.0) continue;
        if (q < 0 || score > best) {
          q = j;
          dir = jdir;
          best = score;
          if (bland) break;
        }
      }
      if (q < 0) {
        recompute_basic_values();
        return LpStatus::kOptimal;
      }

      double step = (std::isfinite(up_[q]) && std::isfinite(lo_[q]))
                        ? up_[q] - lo_[q]
                        : kInf;
      int leave = -1;
      double leave_alpha = 0.0;
      for (int r = 0; r < m_; ++r) {
        const double alpha = -row_ptr(r)[q] * dir;
        if (std::fabs(alpha) <= opt_.pivot_tol) continue;
        const int b = head_[r];
        double ratio;
        if (alpha > 0) {
          if (!std::isfinite(up_[b])) continue;
          ratio = (up_[b] - x_[b]) / alpha;
        } else {
          if (!std::isfinite(lo_[b])) continue;
          ratio = (x_[b] - lo_[b]) / -alpha;
        }
        ratio = std::max(ratio, 0.0);
        bool take = false;
        if (ratio < step - 1e-12) {
          take = true;
        } else if (leave >= 0 && ratio <= step + 1e-12) {
          take = bland ? head_[r] < head_[leave]
                       : std::fabs(alpha) > std::fabs(leave_alpha);
        }
        if (take) {
          step = ratio;
          leave = r;
          leave_alpha = alpha;
        }
      }
      if (!std::isfinite(step)) return LpStatus::kUnbounded;

      ++iterations_;
      degenerate_run = step <= 1e-12 ? degenerate_run + 1 : 0;
      x_[q] += dir * step;
      if (step != 0.0) {
        for (int r = 0; r < m_; ++r) {
          const double t = row_ptr(r)[q];
          if (t != 0.0) x_[head_[r]] -= t * dir * step;
        }
      }
      if (leave < 0) {
        state_[q] = dir > 0 ? ColState::kUpper : ColState::kLower;
        x_[q] = dir > 0 ? up_[q] : lo_[q];
      } else {
        const int b = head_[leave];
        if (leave_alpha > 0) {
          x_[b] = up_[b];
          state_[b] = ColState::kUpper;
        } else {
          x_[b] = lo_[b];
          state_[b] = ColState::kLower;
        }
        pivot(leave, q);
        state_[q] = ColState::kBasic;
      }
      if (++since_refresh >= 100) {
        since_refresh = 0;
        recompute_basic_values();
        compute_reduced_costs(cost);
      }
    }
  }

  void retire_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (head_[r] < first_art_) continue;
      const double* t = row_ptr(r);
      int q = -1;
      double best = 1e-7;
      for (int j = 0; j < first_art_; ++j) {
        if (state_[j] == ColState::kBasic) continue;
        if (std::fabs(t[j]) > best) {
          best = std::fabs(t[j]);
          q = j;
        }
      }
      const int art = head_[r];
      x_[art] = 0.0;
      if (q < 0) continue;  // redundant row; artificial stays basic at zero
      d_.assign(ncols_, 0.0);
      pivot(r, q);
      state_[q] = ColState::kBasic;
      state_[art] = ColState::kLower;
    }
    for (int j = first_art_; j < ncols_; ++j) {
      lo_[j] = 0.0;
      up_[j] = 0.0;
      if (state_[j] != ColState::kBasic) x_[j] = 0.0;
    }
    recompute_basic_values();
  }

  LpOptions opt_;
  int m_;
  int n_;
  int ncols_ = 0;
  int first_art_ = 0;
  std::vector<double> tab_;
  std::vector<double> lo_, up_, x_, d_;
  std::vector<int> head_;
  std::vector<ColState> state_;
  long iterations_ = 0;
};

LpSolution run(const Model& model, const std::vector<double>& cost,
               std::span<const double> lower, std::span<const double> upper,
               const LpOptions& options) {
  const int n = model.num_variables();
  if (static_cast<int>(lower.size()) != n ||
      static_cast<int>(upper.size()) != n)
    throw DimensionError("bound override length differs from variable count");
  LpSolution sol;
  for (int j = 0; j < n; ++j) {
    if (lower[j] > upper[j] + options.feas_tol) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
  }
  DenseSimplex simplex(model, lower, upper, options);
  sol.status = simplex.solve(cost);
  sol.iterations = simplex.iterations();
  if (sol.status == LpStatus::kOptimal) {
    sol.values = simplex.structural_values();
    sol.objective = 0.0;
    for (int j = 0; j < n; ++j) sol.objective += cost[j] * sol.values[j];
  }
  return sol;
}

void model_bounds(const Model& model, std::vector<double>& lo,
                  std::vector<double>& up) {
  lo.clear();
  up.clear();
  for (const auto& v : model.variables()) {
    lo.push_back(v.lower);
    up.push_back(v.upper);
  }
}

}  // namespace

LpSolution lp_solve(const Model& model, const LpOptions& options) {
  std::vector<double> lo, up;
  model_bounds(model, lo, up);
  return lp_solve(model, lo, up, options);
}

LpSolution lp_solve(const Model& model, std::span<const double> lower,
                    std::span<const double> upper, const LpOptions& options) {
  std::vector<double> cost(model.num_variables(), 0.0);
  for (const auto& t : model.objective()) cost[t.var] += t.coef;
  LpSolution sol = run(model, cost, lower, upper, options);
  if (sol.status == LpStatus::kOptimal)
    sol.objective += model.objective_constant();
  return sol;
}

LpSolution lp_optimize(const Model& model, const LinExpr& objective,
                       bool maximize, std::span<const double> lower,
                       std::span<const double> upper,
                       const LpOptions& options) {
  std::vector<double> cost(model.num_variables(), 0.0);
  const double sign = maximize ? -1.0 : 1.0;
  for (const auto& t : objective.terms()) cost[t.var] += sign * t.coef;
  LpSolution sol = run(model, cost, lower, upper, options);
  if (sol.status == LpStatus::kOptimal)
    sol.objective = sign * sol.objective + objective.constant();
  return sol;
}

}  // namespace owa::milp
