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

#ifndef CKW_QUADRATURE_HPP_
#define CKW_QUADRATURE_HPP_

#include <functional>
#include <vector>

namespace ckw {

// m-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& GaussLegendre(int m);

struct AdaptiveOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  int initial_panels = 8;
  int max_depth = 40;
  int nodes = 16;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  int panels = 0;
  bool converged = true;
};

// Adaptive bisection with a fixed Gauss-Legendre rule per panel: a panel is
// accepted when the rule on the panel and the sum over its halves agree to
// within its share of max(abs_tol, rel_tol * |estimate|).
QuadratureResult IntegrateAdaptive(const std::function<double(double)>& f, double a, double b,
                                   const AdaptiveOptions& options = {});

}  // namespace ckw

#endif  // CKW_QUADRATURE_HPP_
