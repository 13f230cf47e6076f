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

#include "owa/core.hpp"

#include <algorithm>
#include <numeric>

#include "owa/errors.hpp"

namespace owa {

CostMatrix::CostMatrix(int p, int n, std::vector<Rational> row_major)
    : p_(p), n_(n), entries_(std::move(row_major)) {
  if (p < 1 || n < 1) throw InvariantError("cost matrix needs p >= 1, n >= 1");
  if (entries_.size() != std::size_t(p) * n)
    throw DimensionError("cost matrix entry count does not match p x n");
  values_.reserve(entries_.size());
  for (const auto& e : entries_) {
    if (e < 0) throw InvariantError("cost matrix entries must be non-negative");
    values_.push_back(to_double(e));
  }
}

std::span<const Rational> CostMatrix::row(int i) const {
  return {entries_.data() + index(i, 0), static_cast<std::size_t>(n_)};
}

OutcomeVector CostMatrix::outcomes(std::span<const std::uint8_t> x) const {
  if (static_cast<int>(x.size()) != n_)
    throw DimensionError("design vector length " + std::to_string(x.size()) +
                         " != n = " + std::to_string(n_));
  OutcomeVector y(p_, Rational(0));
  for (int i = 0; i < p_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (x[j]) y[i] += at(i, j);
    }
  }
  return y;
}

bool CostMatrix::all_integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& r) { return is_integer(r); });
}

WeightVector::WeightVector(std::vector<Rational> w, bool allow_signed)
    : omega(std::move(w)), signed_allowed(allow_signed) {
  if (!signed_allowed && has_negative())
    throw InvariantError("negative weight without signed extension");
}

bool WeightVector::has_negative() const {
  return std::any_of(omega.begin(), omega.end(),
                     [](const Rational& r) { return r < 0; });
}

Permutation Permutation::from_pi(std::vector<int> pi) {
  const int p = static_cast<int>(pi.size());
  std::vector<int> sigma(p, -1);
  for (int i = 0; i < p; ++i) {
    if (pi[i] < 0 || pi[i] >= p || sigma[pi[i]] != -1)
      throw InvariantError("not a permutation");
    sigma[pi[i]] = i;
  }
  Permutation perm;
  perm.pi_ = std::move(pi);
  perm.sigma_ = std::move(sigma);
  return perm;
}

Permutation Permutation::from_sigma(std::vector<int> sigma) {
  Permutation inv = from_pi(std::move(sigma));
  Permutation perm;
  perm.pi_ = inv.sigma_;
  perm.sigma_ = inv.pi_;
  return perm;
}

Permutation Permutation::identity(int p) {
  std::vector<int> id(p);
  std::iota(id.begin(), id.end(), 0);
  return from_pi(std::move(id));
}

SquareBinaryMatrix::SquareBinaryMatrix(int p, std::vector<std::uint8_t> cells)
    : p_(p), cells_(std::move(cells)) {
  if (cells_.size() != std::size_t(p) * p)
    throw DimensionError("square matrix needs p*p cells");
  for (auto c : cells_) {
    if (c > 1) throw InvariantError("binary matrix entry must be 0 or 1");
  }
}

bool PositionMatrixZ::is_valid() const {
  const int p = size();
  for (int k = 0; k < p; ++k) {
    int row = 0, col = 0;
    for (int l = 0; l < p; ++l) {
      row += at(k, l);
      col += at(l, k);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

bool RelativePositionMatrixS::is_valid() const {
  const int p = size();
  for (int j = 0; j < p; ++j) {
    int col = 0;
    for (int i = 0; i < p; ++i) col += at(i, j);
    if (col != j) return false;
  }
  for (int i = 0; i < p; ++i) {
    if (p > 0 && at(i, 0) != 0) return false;
    for (int j = 0; j + 1 < p; ++j) {
      if (at(i, j + 1) < at(i, j)) return false;
    }
  }
  return true;
}

SortedOutcomes sort_outcomes(const OutcomeVector& y) {
  std::vector<int> sigma(y.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::stable_sort(sigma.begin(), sigma.end(),
                   [&](int a, int b) { return y[a] > y[b]; });
  OutcomeVector sorted;
  sorted.reserve(y.size());
  for (int i : sigma) sorted.push_back(y[i]);
  return {std::move(sorted), Permutation::from_sigma(std::move(sigma))};
}

Rational owa_of_outcomes(const OutcomeVector& y, const WeightVector& omega) {
  if (static_cast<int>(y.size()) != omega.size())
    throw DimensionError("weight vector length differs from outcome count");
  OutcomeVector sorted = y;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  Rational value = 0;
  for (std::size_t j = 0; j < sorted.size(); ++j)
    value += omega.omega[j] * sorted[j];
  return value;
}

Rational evaluate_owa(std::span<const std::uint8_t> x, const CostMatrix& c,
                      const WeightVector& omega) {
  return owa_of_outcomes(c.outcomes(x), omega);
}

CostMatrix om_as_owa(const std::vector<Rational>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<Rational> entries(std::size_t(n) * n, Rational(0));
  for (int i = 0; i < n; ++i) entries[std::size_t(i) * n + i] = d[i];
  return CostMatrix(n, n, std::move(entries));
}

CostMatrix vaom_as_owa(const std::vector<std::vector<Rational>>& d,
                       const std::vector<std::vector<Rational>>& gamma,
                       const std::vector<Rational>& a,
                       std::vector<std::string>* warnings) {
  const int p = static_cast<int>(d.size());
  if (p == 0 || static_cast<int>(gamma.size()) != p ||
      static_cast<int>(a.size()) != p)
    throw DimensionError("VAOM data must have p rows in d, gamma and a");
  const int q = static_cast<int>(gamma.front().size());
  if (q < 1 || q > p) throw DimensionError("VAOM needs 1 <= q <= p");
  for (int i = 0; i < p; ++i) {
    if (static_cast<int>(d[i].size()) != p)
      throw DimensionError("distance matrix must be p x p");
    if (static_cast<int>(gamma[i].size()) != q)
      throw DimensionError("gamma must be p x q");
    Rational total = 0;
    for (const auto& g : gamma[i]) total += g;
    if (total != 1 && warnings)
      warnings->push_back("gamma row " + std::to_string(i + 1) +
                          " sums to " + to_string(total));
  }
  const int block = p * q;
  const int n = p * block;
  std::vector<Rational> entries(std::size_t(p) * n, Rational(0));
  for (int i = 0; i < p; ++i) {
    for (int k = 0; k < p; ++k) {
      for (int l = 0; l < q; ++l) {
        entries[std::size_t(i) * n + i * block + k * q + l] =
            a[i] * gamma[i][l] * d[i][k];
      }
    }
  }
  return CostMatrix(p, n, std::move(entries));
}

PositionMatrixZ z_of_permutation(const Permutation& perm) {
  PositionMatrixZ z(perm.size());
  for (int i = 0; i < perm.size(); ++i) z.set(i, perm.pi()[i], 1);
  return z;
}

RelativePositionMatrixS s_of_permutation(const Permutation& perm) {
  RelativePositionMatrixS s(perm.size());
  for (int i = 0; i < perm.size(); ++i) {
    for (int j = perm.pi()[i] + 1; j < perm.size(); ++j) s.set(i, j, 1);
  }
  return s;
}

Permutation permutation_of_z(const PositionMatrixZ& z) {
  if (!z.is_valid()) throw InvariantError("z is not a permutation matrix");
  std::vector<int> pi(z.size());
  for (int i = 0; i < z.size(); ++i) {
    for (int j = 0; j < z.size(); ++j) {
      if (z.at(i, j)) pi[i] = j;
    }
  }
  return Permutation::from_pi(std::move(pi));
}

Permutation permutation_of_s(const RelativePositionMatrixS& s) {
  return permutation_of_z(z_from_s(s));
}

RelativePositionMatrixS s_from_z(const PositionMatrixZ& z) {
  if (!z.is_valid()) throw InvariantError("z violates its row/column sums");
  const int p = z.size();
  RelativePositionMatrixS s(p);
  for (int i = 0; i < p; ++i) {
    int tail = 0;
    for (int j = p - 1; j >= 0; --j) {
      tail += z.at(i, j);
      s.set(i, j, static_cast<std::uint8_t>(1 - tail));
    }
  }
  return s;
}

PositionMatrixZ z_from_s(const RelativePositionMatrixS& s) {
  if (!s.is_valid()) throw InvariantError("s violates its column sums or order");
  const int p = s.size();
  PositionMatrixZ z(p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j + 1 < p; ++j)
      z.set(i, j, static_cast<std::uint8_t>(s.at(i, j + 1) - s.at(i, j)));
    z.set(i, p - 1, static_cast<std::uint8_t>(1 - s.at(i, p - 1)));
  }
  return z;
}

WeightVector hurwicz_weights(const Rational& alpha, int p) {
  if (p < 2) throw InvariantError("Hurwicz weights need p >= 2");
  if (alpha < 0 || alpha > 1) throw InvariantError("alpha must lie in [0,1]");
  std::vector<Rational> w(p, Rational(0));
  w.front() = alpha;
  w.back() = 1 - alpha;
  return WeightVector(std::move(w));
}

}  // namespace owa
