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

#include "ckw/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "ckw/error.hpp"

namespace ckw {

namespace {

GaussLegendreRule ComputeRule(int m) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= m; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= m; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(m - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(m - 1 - i)] = w;
  }
  if (m % 2 == 1) rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
  return rule;
}

double ApplyRule(const GaussLegendreRule& rule, const std::function<double(double)>& f,
                 double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

}  // namespace

const GaussLegendreRule& GaussLegendre(int m) {
  if (m < 1) throw InputError("Gauss-Legendre rule needs at least one node");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(ComputeRule(m));
  return *slot;
}

QuadratureResult IntegrateAdaptive(const std::function<double(double)>& f, double a, double b,
                                   const AdaptiveOptions& options) {
  const GaussLegendreRule& rule = GaussLegendre(options.nodes);
  QuadratureResult result;
  if (a == b) return result;
  const double total_width = std::abs(b - a);

  struct Panel {
    double lo, hi, estimate;
    int depth;
  };
  std::vector<Panel> stack;
  const int p0 = std::max(1, options.initial_panels);
  double coarse_total = 0.0;
  for (int i = p0 - 1; i >= 0; --i) {
    const double lo = a + (b - a) * i / p0;
    const double hi = i + 1 == p0 ? b : a + (b - a) * (i + 1) / p0;
    const double est = ApplyRule(rule, f, lo, hi);
    coarse_total += est;
    stack.push_back({lo, hi, est, 0});
  }
  result.evaluations += static_cast<long>(p0) * options.nodes;
  const double target = std::max(options.abs_tol, options.rel_tol * std::abs(coarse_total));

  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    const double left = ApplyRule(rule, f, p.lo, mid);
    const double right = ApplyRule(rule, f, mid, p.hi);
    result.evaluations += 2L * options.nodes;
    const double refined = left + right;
    const double err = std::abs(refined - p.estimate);
    // Below the rounding noise of the panel sum further splitting cannot help.
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(refined);
    const double share = std::max(noise, target * std::abs(p.hi - p.lo) / total_width);
    if (err <= share || p.depth >= options.max_depth) {
      if (err > share) result.converged = false;
      result.value += refined;
      result.error_estimate += err;
      ++result.panels;
      continue;
    }
    stack.push_back({mid, p.hi, right, p.depth + 1});
    stack.push_back({p.lo, mid, left, p.depth + 1});
  }
  return result;
}

}  // namespace ckw
