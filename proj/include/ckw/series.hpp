// Copyright 2026 The ckw Authors
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

#ifndef CKW_SERIES_HPP_
#define CKW_SERIES_HPP_

#include <memory>
#include <vector>

#include "ckw/multi_index.hpp"

namespace ckw {

// Truncated univariate Taylor series sum_{j<=m} a_j e^j. Coefficient j of a
// function's series at a point is f^(j)(x) / j!.
class Series {
 public:
  explicit Series(int order) : a_(static_cast<std::size_t>(order) + 1, 0.0) {}
  static Series Constant(int order, double c);
  // The series of x -> x at x0: x0 + e.
  static Series Variable(int order, double x0);

  int order() const { return static_cast<int>(a_.size()) - 1; }
  double& operator[](int j) { return a_[static_cast<std::size_t>(j)]; }
  double operator[](int j) const { return a_[static_cast<std::size_t>(j)]; }
  // j-th derivative = j! a_j.
  double Derivative(int j) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator*(double s) const;
  Series operator/(const Series& o) const;

 private:
  std::vector<double> a_;
};

Series Reciprocal(const Series& s);
Series Exp(const Series& s);

// Truncated polynomial in n variables, total degree <= m, coefficients in the
// graded lexicographic order of MultiIndexSet(n, m).
class TruncatedPoly {
 public:
  TruncatedPoly(int n, int m);
  static TruncatedPoly Constant(int n, int m, double c);

  int dim() const { return basis_->dim(); }
  int degree() const { return basis_->max_order(); }
  const MultiIndexSet& basis() const { return *basis_; }

  double& operator[](std::size_t i) { return c_[i]; }
  double operator[](std::size_t i) const { return c_[i]; }
  double Coefficient(const MultiIndex& beta) const { return c_[basis_->IndexOf(beta)]; }
  double& Coefficient(const MultiIndex& beta) { return c_[basis_->IndexOf(beta)]; }

  TruncatedPoly operator+(const TruncatedPoly& o) const;
  TruncatedPoly operator*(const TruncatedPoly& o) const;
  TruncatedPoly operator*(double s) const;

 private:
  std::shared_ptr<const MultiIndexSet> basis_;
  std::shared_ptr<const std::vector<std::vector<std::ptrdiff_t>>> product_index_;
  std::vector<double> c_;
};

}  // namespace ckw

#endif  // CKW_SERIES_HPP_
