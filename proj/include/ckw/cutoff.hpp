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

#ifndef CKW_CUTOFF_HPP_
#define CKW_CUTOFF_HPP_

#include <span>
#include <vector>

#include "ckw/multi_index.hpp"

namespace ckw {

// C^inf step on the line: chi = 1 on [-1, 1], chi = 0 outside (-2, 2),
// 0 <= chi <= 1. It is the indicator of [-1.5, 1.5] mollified by the bump
//   phi(v) = c exp(-1 / (1 - 4 v^2)),  |v| < 1/2,
// i.e. chi(t) = Phi(t + 1.5) - Phi(t - 1.5) with Phi the bump's CDF.
// Values on [-1, 1] are exactly 1.0 and outside (-2, 2) exactly 0.0.
class MollifiedStep {
 public:
  static const MollifiedStep& Instance();

  double operator()(double t) const;
  // j-th derivative, j <= kMaxDerivative.
  double Derivative(double t, int j) const;

  // Bump phi and its derivatives.
  double Bump(double v, int j = 0) const;
  // Phi(u) = int_{-1/2}^{u} phi.
  double BumpCdf(double u) const;

  static constexpr int kMaxDerivative = 16;

 private:
  MollifiedStep();
  double RawBump(double v) const;  // unnormalized exp(-1/(1-4v^2))

  double norm_ = 1.0;
  double h_ = 0.0;
  std::vector<double> cdf_;  // Phi at -1/2 + i h
  std::vector<double> phi_;
  std::vector<double> dphi_;
};

// rho(x) = prod_i chi(x_i) and rho_l(x) = rho(x / l): 0 <= rho_l <= 1,
// rho_l = 1 on the cube max|x_i| <= l, supp rho_l in max|x_i| <= 2l.
class CutoffFamily {
 public:
  CutoffFamily(int n, double scale);

  int dim() const { return n_; }
  double scale() const { return scale_; }

  double operator()(std::span<const double> x) const;
  // D^nu rho_l(x) = l^{-|nu|} prod_i chi^{(nu_i)}(x_i / l).
  double Derivative(std::span<const double> x, const MultiIndex& nu) const;

 private:
  int n_;
  double scale_;
};

// Empirical c_{k,n}: max over |alpha| <= k + 1 of sup |D^alpha rho| (l = 1),
// with the suprema of the one-dimensional factors sampled on a uniform grid
// of `samples` points over [-2, 2].
double EmpiricalCutoffConstant(int k, int n, int samples = 8001);

}  // namespace ckw

#endif  // CKW_CUTOFF_HPP_
