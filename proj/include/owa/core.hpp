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

#ifndef OWA_CORE_HPP_
#define OWA_CORE_HPP_

// The ordered weighted average operator, its ordered-median and
// vector-assignment special cases, and the two binary encodings of the
// sorting permutation.
//
// Indices are 0-based throughout the library; file formats and reports print
// them 1-based.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "owa/rational.hpp"

namespace owa {

using BinaryVector = std::vector<std::uint8_t>;
using OutcomeVector = std::vector<Rational>;

// p x n matrix whose row i is the cost vector of objective i.
class CostMatrix {
 public:
  CostMatrix() = default;
  // Throws InvariantError on negative entries or empty dimensions.
  CostMatrix(int p, int n, std::vector<Rational> row_major);

  int p() const { return p_; }
  int n() const { return n_; }
  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }
  double value(int i, int j) const { return values_[index(i, j)]; }
  std::span<const Rational> row(int i) const;
  const std::vector<Rational>& entries() const { return entries_; }

  // Outcome y = C x.
  OutcomeVector outcomes(std::span<const std::uint8_t> x) const;
  bool all_integral() const;

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
  int p_ = 0;
  int n_ = 0;
  std::vector<Rational> entries_;
  std::vector<double> values_;
};

struct WeightVector {
  std::vector<Rational> omega;
  bool signed_allowed = false;

  WeightVector() = default;
  // Throws InvariantError on a negative weight unless signed_allowed.
  explicit WeightVector(std::vector<Rational> w, bool allow_signed = false);

  int size() const { return static_cast<int>(omega.size()); }
  bool has_negative() const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// pi[i] is the position of objective i; sigma[j] the objective at position j.
class Permutation {
 public:
  Permutation() = default;
  static Permutation from_pi(std::vector<int> pi);
  static Permutation from_sigma(std::vector<int> sigma);
  static Permutation identity(int p);

  int size() const { return static_cast<int>(pi_.size()); }
  const std::vector<int>& pi() const { return pi_; }
  const std::vector<int>& sigma() const { return sigma_; }
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> pi_;
  std::vector<int> sigma_;
};

// Square 0/1 matrix, row-major.
class SquareBinaryMatrix {
 public:
  SquareBinaryMatrix() = default;
  explicit SquareBinaryMatrix(int p) : p_(p), cells_(std::size_t(p) * p, 0) {}
  SquareBinaryMatrix(int p, std::vector<std::uint8_t> cells);

  int size() const { return p_; }
  std::uint8_t at(int i, int j) const { return cells_[std::size_t(i) * p_ + j]; }
  void set(int i, int j, std::uint8_t v) { cells_[std::size_t(i) * p_ + j] = v; }
  const std::vector<std::uint8_t>& cells() const { return cells_; }
  friend bool operator==(const SquareBinaryMatrix&,
                         const SquareBinaryMatrix&) = default;

 private:
  int p_ = 0;
  std::vector<std::uint8_t> cells_;
};

// z[i][j] = 1 iff objective i occupies position j.
struct PositionMatrixZ : SquareBinaryMatrix {
  using SquareBinaryMatrix::SquareBinaryMatrix;
  // Every row and every column sums to one.
  bool is_valid() const;
};

// s[i][j] = 1 iff objective i sits at a position strictly before j.
struct RelativePositionMatrixS : SquareBinaryMatrix {
  using SquareBinaryMatrix::SquareBinaryMatrix;
  // Column j sums to j (0-based), rows are non-decreasing, first column zero.
  bool is_valid() const;
};

struct SortedOutcomes {
  OutcomeVector sorted;
  Permutation order;
};

// Non-increasing sort; ties keep the smaller objective index first.
SortedOutcomes sort_outcomes(const OutcomeVector& y);

// omega . sorted(C x).
Rational evaluate_owa(std::span<const std::uint8_t> x, const CostMatrix& c,
                      const WeightVector& omega);
Rational owa_of_outcomes(const OutcomeVector& y, const WeightVector& omega);

// Ordered median as an OWA: C = Diag(d).
CostMatrix om_as_owa(const std::vector<Rational>& d);

// Vector assignment ordered median as an OWA. d is p x p (customer x
// facility), gamma is p x q (customer x assignment level), a has p demands.
// Column layout: customer block i, facility k, level l ->
// i*p*q + k*q + l. Rows of gamma that do not sum to one produce a warning
// string in *warnings (when given) but are accepted.
CostMatrix vaom_as_owa(const std::vector<std::vector<Rational>>& d,
                       const std::vector<std::vector<Rational>>& gamma,
                       const std::vector<Rational>& a,
                       std::vector<std::string>* warnings = nullptr);

PositionMatrixZ z_of_permutation(const Permutation& perm);
RelativePositionMatrixS s_of_permutation(const Permutation& perm);
Permutation permutation_of_z(const PositionMatrixZ& z);
Permutation permutation_of_s(const RelativePositionMatrixS& s);

// s_ij = 1 - sum_{k >= j} z_ik.
RelativePositionMatrixS s_from_z(const PositionMatrixZ& z);
// z_ij = s_i,j+1 - s_ij for j < p-1, z_i,p-1 = 1 - s_i,p-1.
PositionMatrixZ z_from_s(const RelativePositionMatrixS& s);

// (alpha, 0, ..., 0, 1 - alpha).
WeightVector hurwicz_weights(const Rational& alpha, int p);

}  // namespace owa

#endif  // OWA_CORE_HPP_
