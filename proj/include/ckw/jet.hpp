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

#ifndef CKW_JET_HPP_
#define CKW_JET_HPP_

#include <memory>
#include <span>
#include <vector>

#include "ckw/multi_index.hpp"

namespace ckw {

using Point = std::vector<double>;

double Distance(std::span<const double> x, std::span<const double> y);

// Shared, immutable index set for (n, k).
std::shared_ptr<const MultiIndexSet> IndexSetFor(int n, int k);

// Order-k jet at a base point: one coefficient c_alpha (playing the role of
// D^alpha f(x)) per multi-index |alpha| <= k, graded lexicographic order.
class Jet {
 public:
  Jet(Point base, int k, std::vector<double> coefficients);
  static Jet Zero(Point base, int k);

  const Point& base() const { return base_; }
  int dim() const { return static_cast<int>(base_.size()); }
  int order() const { return k_; }
  const MultiIndexSet& indices() const { return *indices_; }
  std::span<const double> coefficients() const { return c_; }

  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  double Coefficient(const MultiIndex& alpha) const { return c_[indices_->IndexOf(alpha)]; }
  double& Coefficient(const MultiIndex& alpha) { return c_[indices_->IndexOf(alpha)]; }

 private:
  Point base_;
  int k_;
  std::shared_ptr<const MultiIndexSet> indices_;
  std::vector<double> c_;
};

// D^alpha T(z), where T(z) = sum_{|beta|<=k} c_beta / beta! (z - x)^beta is the
// Taylor polynomial of the jet. Throws InputError when |alpha| > k.
double TaylorEval(const Jet& jet, const MultiIndex& alpha, std::span<const double> z);

// Finite point set with one order-k jet per point. Points are pairwise
// distinct; construction throws InputError naming the first duplicate.
class WhitneyField {
 public:
  WhitneyField(int n, int k, std::vector<Jet> jets);
  // k = 0 data: one value per point.
  static WhitneyField FromValues(std::vector<Point> points, std::span<const double> values);

  int dim() const { return n_; }
  int order() const { return k_; }
  std::size_t size() const { return jets_.size(); }
  const Jet& jet(std::size_t i) const { return jets_[i]; }
  const Point& point(std::size_t i) const { return jets_[i].base(); }
  const std::vector<Jet>& jets() const { return jets_; }
  double MinPairwiseDistance() const;

  // Subfield on the listed point indices.
  WhitneyField Restrict(std::span<const std::size_t> indices) const;
  // a * this + b * other; requires identical points, n and k.
  WhitneyField Combine(double a, const WhitneyField& other, double b) const;
  WhitneyField Scaled(double s) const;

 private:
  int n_;
  int k_;
  std::vector<Jet> jets_;
};

}  // namespace ckw

#endif  // CKW_JET_HPP_
