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

#ifndef CKW_WHITNEY_HPP_
#define CKW_WHITNEY_HPP_

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ckw/jet.hpp"
#include "ckw/kernels.hpp"
#include "ckw/modulus.hpp"
#include "ckw/multi_index.hpp"

namespace ckw {

struct NormContext {
  int k = 0;
  int n = 1;
  Modulus omega = Modulus::Linear();

  void Check() const;
};

// Pairwise Taylor-compatibility constants of a Whitney field:
//   lambda_sup = max_{x, |alpha|<=k} |c_alpha(x)|
//   lambda_osc = max_{x != y, z in {x,y}, |alpha|<=k}
//                |D^alpha (T_x - T_y)(z)| / (|x-y|^{k-|alpha|} omega(|x-y|))
//   lambda     = max(lambda_sup, lambda_osc)
// For k = 0 lambda is exactly the trace norm of the data.
struct LambdaReport {
  double lambda_sup = 0.0;
  double lambda_osc = 0.0;
  double lambda = 0.0;
  // Witnesses; ties go to the first in (i, j, z, alpha) order with i < j.
  std::size_t sup_point = 0;
  MultiIndex sup_alpha;
  std::size_t osc_i = 0;
  std::size_t osc_j = 0;
  int osc_z = 0;  // 0: z = x_i, 1: z = x_j
  MultiIndex osc_alpha;
  bool has_pair = false;
};

LambdaReport WhitneyLambda(const WhitneyField& field, const NormContext& ctx,
                           Execution exec = Execution::kParallel);

// Oscillation term of one pair, maximized over z and alpha. Returns the value
// and writes the witnessing (z, alpha index) when requested.
double PairOscillation(const Jet& a, const Jet& b, const Modulus& omega,
                       int* z_out = nullptr, std::size_t* alpha_out = nullptr);

// A function with derivatives up to max_order available pointwise.
struct SmoothFunction {
  int dim = 1;
  int max_order = 0;
  std::function<double(std::span<const double> x, const MultiIndex& alpha)> derivative;

  double operator()(std::span<const double> x) const {
    return derivative(x, MultiIndex::Zero(dim));
  }
};

// Sampled C^{k,omega} norm. Suprema over R^n are replaced by maxima over the
// sample grid and the pair sample, so every value is a LOWER bound on the
// true norm; the report records the sample sizes.
struct NormEstimate {
  double sup_part = 0.0;        // max_{|alpha|<=k} max_x |D^alpha f(x)|
  double seminorm_part = 0.0;   // max_{|alpha|=k} max_pairs |D^a f(x)-D^a f(y)|/omega
  double norm = 0.0;            // max of the two
  bool lower_bound = true;
  std::size_t sup_point = 0;
  MultiIndex sup_alpha;
  std::size_t seminorm_pair = 0;
  MultiIndex seminorm_alpha;
  std::size_t grid_size = 0;
  std::size_t pair_count = 0;
};

using PointPair = std::pair<Point, Point>;

NormEstimate CkNormEstimate(const SmoothFunction& f, const NormContext& ctx,
                            std::span<const Point> sample,
                            std::span<const PointPair> pairs,
                            Execution exec = Execution::kParallel);

// All unordered pairs of distinct sample points.
std::vector<PointPair> AllPairs(std::span<const Point> sample);

}  // namespace ckw

#endif  // CKW_WHITNEY_HPP_
