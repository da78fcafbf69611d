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

#ifndef CKW_EXTENSION_HPP_
#define CKW_EXTENSION_HPP_

#include <span>
#include <vector>

#include "ckw/jet.hpp"
#include "ckw/kernels.hpp"
#include "ckw/modulus.hpp"
#include "ckw/whitney.hpp"

namespace ckw {

enum class McShaneMode { kMin, kMax, kAverage };

// k = 0 extension F(x) = clamp(min_s f(s) + lambda omega(|x - s|), -M, M)
// (kMin; kMax uses max_s f(s) - lambda omega(|x - s|), kAverage the mean of
// both). lambda is the omega-seminorm of the data and M = max |f|, so the
// C^{0,omega} norm of F equals the trace norm of the data.
class McShaneExtension {
 public:
  McShaneExtension(WhitneyField data, Modulus omega, McShaneMode mode = McShaneMode::kMin,
                   Execution exec = Execution::kParallel);

  double lambda() const { return lambda_; }
  double sup_bound() const { return sup_bound_; }
  // max(M, lambda): the trace norm of the data.
  double trace_norm() const { return std::max(lambda_, sup_bound_); }
  McShaneMode mode() const { return mode_; }
  const WhitneyField& data() const { return data_; }
  const Modulus& omega() const { return omega_; }

  double operator()(std::span<const double> x) const;
  std::vector<double> EvaluateBatch(std::span<const Point> points,
                                    Execution exec = Execution::kParallel) const;

 private:
  double Envelope(std::span<const double> x, bool lower) const;

  WhitneyField data_;
  Modulus omega_;
  McShaneMode mode_;
  double lambda_ = 0.0;
  double sup_bound_ = 0.0;
};

// One-dimensional order-k extension: between consecutive knots the unique
// polynomial of degree 2k + 1 matching both jets; outside the hull the
// endpoint Taylor polynomial times a cutoff of the distance (1 up to
// tail_scale, 0 beyond 2 tail_scale).
class HermiteExtension1D {
 public:
  explicit HermiteExtension1D(WhitneyField field, double tail_scale = 1.0);

  int order() const { return k_; }
  std::size_t size() const { return xs_.size(); }
  double knot(std::size_t i) const { return xs_[i]; }

  // (F(x), F'(x), ..., F^{(k)}(x)).
  std::vector<double> Evaluate(double x) const;
  double Derivative(double x, int m) const;
  double operator()(double x) const { return Derivative(x, 0); }
  SmoothFunction AsFunction() const;

  struct Weight {
    std::size_t knot;  // index into the sorted knots
    int component;     // jet component j (derivative order)
    double weight;
  };
  // F^{(m)}(x) = sum weight * c_component(knot): the operator is linear in
  // the data with these coefficients.
  std::vector<Weight> Weights(double x, int m = 0) const;

 private:
  // Locates x: knot index i with x == xs_[i] (exact = true), the gap
  // [xs_[i], xs_[i+1]], or a tail (i = 0 left, i = last right).
  enum class Where { kKnot, kGap, kLeftTail, kRightTail };
  Where Locate(double x, std::size_t* i) const;

  int k_;
  double tail_scale_;
  std::vector<double> xs_;
  std::vector<std::vector<double>> jets_;  // jets_[i][j] = c_j at xs_[i]
  // Hermite basis in s in [0, 1]: basis_[side][j] holds monomial coefficients
  // of the polynomial with j-th derivative 1 at s = side and all other
  // prescribed derivatives 0.
  std::vector<std::vector<double>> basis_[2];
};

struct DepthEntry {
  std::size_t knot;
  double point;
  std::vector<double> weights;  // per jet component
};

struct DepthRecord {
  bool linear = true;  // false: NOT_LINEAR, no weights reported
  std::vector<DepthEntry> active;
  std::size_t depth = 0;
  // |sum of value weights - 1|: constants must be reproduced.
  double constant_defect = 0.0;
  bool reproduces_constants = true;
};

DepthRecord DepthAudit(const HermiteExtension1D& op, double x);
DepthRecord DepthAudit(const McShaneExtension& op, std::span<const double> x);

}  // namespace ckw

#endif  // CKW_EXTENSION_HPP_
