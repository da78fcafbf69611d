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

#ifndef CKW_MARKOV_HPP_
#define CKW_MARKOV_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ckw/jet.hpp"
#include "ckw/kernels.hpp"

namespace ckw {

// Cube Q_r(x) = x + [-r, r]^n, a finite sample of S inside it, and the degree k.
struct MarkovProbe {
  Point center;
  double radius = 1.0;
  int k = 1;
  std::vector<Point> sample;
  int resolution = 33;  // grid points per axis on the cube
  double cap = 1e6;
  // Also solve on the grid with 2 * resolution - 1 points per axis and report
  // the difference.
  bool refine = true;
};

struct MarkovRatio {
  bool capped = false;
  double value = 0.0;         // sup_grid |p| / sup_sample |p| maximized over p
  Point argmax;               // grid point attaining it
  double refined_value = 0.0;
  bool refined_capped = false;
  double refinement_delta = 0.0;  // refined_value - value
  std::size_t grid_size = 0;
  std::size_t lp_count = 0;
};

// Regular grid on Q_r(x) with `resolution` points per axis (n <= 3).
std::vector<Point> CubeGrid(std::span<const double> center, double radius, int resolution);

// The ratio is computed per objective point g in grid + sample as
//   max p(g) s.t. |p| <= 1 on the sample,
// via its dual min |y|_1 s.t. sum_i y_i phi(s_i) = phi(g); an infeasible dual
// means the primal is unbounded and the ratio is CAPPED.
MarkovRatio ComputeMarkovRatio(const MarkovProbe& probe, Execution exec = Execution::kParallel);

// Returns S n Q_r(x) sampled at the given grid resolution.
using SetSampler =
    std::function<std::vector<Point>(std::span<const double> center, double radius, int resolution)>;

// Builtin shapes around the center x: "cube" (S contains the whole cube),
// "halfspace" (z_1 >= x_1), "point" (S = {x}), "line" (the line x + t e_1,
// measure zero for n >= 2).
SetSampler BuiltinSampler(const std::string& name);
// Points of a finite set falling in the cube.
SetSampler FiniteSetSampler(std::vector<Point> points);

enum class MarkovVerdict { kWeakMarkov, kNotDetected };
const char* VerdictName(MarkovVerdict v);

struct MarkovClassification {
  MarkovVerdict verdict = MarkovVerdict::kNotDetected;
  std::vector<double> radii;
  std::vector<MarkovRatio> ratios;   // one per radius (skipped radii omitted)
  std::vector<double> used_radii;
  double min_ratio = 0.0;            // over non-capped ratios; inf if none
  std::vector<std::string> warnings;
};

std::vector<double> DefaultRadii();

struct MarkovOptions {
  int resolution = 33;
  double cap = 1e6;
  double threshold = 1e5;
  bool refine = false;
};

// WEAK_MARKOV when the minimum ratio over the radii is <= threshold;
// otherwise NOT_DETECTED, which is not a proof of the opposite.
MarkovClassification ClassifyWeakMarkov(std::span<const double> center, const SetSampler& sampler,
                                        int k, std::span<const double> radii,
                                        const MarkovOptions& options = {},
                                        Execution exec = Execution::kParallel);

}  // namespace ckw

#endif  // CKW_MARKOV_HPP_
