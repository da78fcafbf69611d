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

#ifndef CKW_TESTS_PROPERTY_CHECKS_HPP_
#define CKW_TESTS_PROPERTY_CHECKS_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "ckw/extension.hpp"
#include "ckw/lp.hpp"
#include "ckw/predual.hpp"
#include "ckw/whitney.hpp"
#include "support.hpp"

namespace ckw::testing {

// Outcome of a randomized property run: trials attempted, failures, and the
// worst observed violation.
struct PropertyResult {
  int trials = 0;
  int failures = 0;
  double worst = 0.0;
  std::string first_failure;

  void Record(bool ok, double violation, const std::string& what) {
    ++trials;
    worst = std::max(worst, violation);
    if (!ok) {
      if (failures == 0) first_failure = what + " (trial " + std::to_string(trials) + ")";
      ++failures;
    }
  }
  bool ok() const { return failures == 0; }
};

// Homogeneity, triangle inequality and definiteness of the pairwise constant.
inline PropertyResult LambdaNormAxioms(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  PropertyResult r;
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % 3, k = t % 3;
    const NormContext ctx{k, n, t % 2 ? Modulus::Power(0.5) : Modulus::Linear()};
    const WhitneyField f = RandomField(rng, 2 + t % 5, n, k);
    std::vector<Jet> jets;
    for (const Jet& j : f.jets()) {
      std::vector<double> c(j.coefficients().size());
      for (double& v : c) v = u(rng) / 3;
      jets.emplace_back(j.base(), k, std::move(c));
    }
    const WhitneyField g(n, k, std::move(jets));
    const double a = u(rng);
    const double lf = WhitneyLambda(f, ctx, Execution::kSerial).lambda;
    const double lg = WhitneyLambda(g, ctx, Execution::kSerial).lambda;
    const double las = WhitneyLambda(f.Scaled(a), ctx, Execution::kSerial).lambda;
    const double lsum = WhitneyLambda(f.Combine(1.0, g, 1.0), ctx, Execution::kSerial).lambda;
    const double lzero = WhitneyLambda(f.Scaled(0.0), ctx, Execution::kSerial).lambda;
    const double hom = std::abs(las - std::abs(a) * lf) / (1.0 + lf);
    const double tri = std::max(0.0, lsum - lf - lg) / (1.0 + lf + lg);
    r.Record(hom <= 1e-12 && tri <= 1e-12 && lzero == 0.0 && lf > 0.0, std::max(hom, tri),
             "whitney_lambda axioms");
  }
  return r;
}

inline AtomicFunctional RandomK0Functional(std::mt19937_64& rng, const std::vector<Point>& pts,
                                           const Modulus& omega) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const int n = static_cast<int>(pts.front().size());
  AtomicFunctional g({0, n, omega});
  for (const Point& p : pts) g.Add(DeltaAtom{p, MultiIndex::Zero(n)}, u(rng));
  return g;
}

// Homogeneity and triangle inequality of the exact k = 0 predual norm.
inline PropertyResult PredualNormAxioms(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  PropertyResult r;
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % 3;
    const Modulus omega = t % 2 ? Modulus::Power(0.5) : Modulus::Linear();
    std::vector<Point> pts;
    for (int i = 0; i < 2 + t % 4; ++i) pts.push_back(RandomPoint(rng, n, -1.5, 1.5));
    const AtomicFunctional g = RandomK0Functional(rng, pts, omega);
    // h shares some points with g and adds one of its own.
    std::vector<Point> other(pts.begin(), pts.begin() + 1);
    other.push_back(RandomPoint(rng, n, -1.5, 1.5));
    const AtomicFunctional h = RandomK0Functional(rng, other, omega);
    const double a = u(rng);
    const double ng = PredualNormK0(g, omega).value;
    const double nh = PredualNormK0(h, omega).value;
    const double nas = PredualNormK0(g.Scaled(a), omega).value;
    const double nsum = PredualNormK0(g.Plus(h), omega).value;
    const double hom = std::abs(nas - std::abs(a) * ng);
    const double tri = std::max(0.0, nsum - ng - nh);
    r.Record(hom <= 1e-9 && tri <= 1e-9, std::max(hom, tri), "predual_norm_k0 axioms");
  }
  return r;
}

// Random bounded LPs: optimal status and a closed duality gap.
inline PropertyResult LpDualityGap(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PropertyResult r;
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % 8, rows = 1 + t % 6;
    lp::LinearProgram p(n, t % 2 ? lp::Sense::kMaximize : lp::Sense::kMinimize);
    std::vector<double> c(static_cast<std::size_t>(n));
    for (double& v : c) v = u(rng);
    p.SetObjective(c);
    for (int j = 0; j < n; ++j) p.SetBounds(j, -1.0 - std::abs(u(rng)), 1.0 + std::abs(u(rng)));
    for (int i = 0; i < rows; ++i) {
      std::vector<double> a(static_cast<std::size_t>(n));
      for (double& v : a) v = u(rng);
      const int type = (t + i) % 3;
      if (type == 2) {
        // Equality through the origin keeps the program feasible.
        p.AddRow(a, lp::RowType::kEqual, 0.0);
      } else {
        p.AddRow(a, type == 0 ? lp::RowType::kLessEqual : lp::RowType::kGreaterEqual,
                 type == 0 ? 0.5 + std::abs(u(rng)) : -0.5 - std::abs(u(rng)));
      }
    }
    const lp::Solution s = lp::Solve(p);
    const double gap = std::abs(s.optimum - s.dual_optimum) / (1.0 + std::abs(s.optimum));
    r.Record(s.status == lp::Status::kOptimal && gap <= 1e-7, gap, "LP duality gap");
  }
  return r;
}

// subset_sup(d) is nondecreasing in d and never exceeds the full value.
inline PropertyResult SubsetMonotonicity(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PropertyResult r;
  for (int t = 0; t < trials; ++t) {
    const int k = t % 2, n = 1 + t % 2;
    const NormContext ctx{k, n, t % 3 ? Modulus::Linear() : Modulus::Power(0.5)};
    const WhitneyField f = RandomField(rng, 5, n, k);
    const int d1 = 1 + t % 4, d2 = d1 + 1;
    const FinitenessReport a = FinitenessGap(f, d1, ctx, Execution::kSerial);
    const FinitenessReport b = FinitenessGap(f, d2, ctx, Execution::kSerial);
    const double drop = std::max(0.0, a.subset_sup - b.subset_sup);
    const double over = std::max(0.0, b.subset_sup - b.full);
    r.Record(drop <= 1e-12 && over <= 1e-9, std::max(drop, over), "subset_sup monotonicity");
  }
  return r;
}

// extend(a f + b g) = a extend(f) + b extend(g) pointwise, all derivatives.
inline PropertyResult HermiteLinearity(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0), step(0.1, 0.6);
  PropertyResult r;
  for (int t = 0; t < trials; ++t) {
    const int k = t % 4, m = 1 + t % 5;
    std::vector<Jet> fj, gj;
    double x = u(rng);
    for (int i = 0; i < m; ++i) {
      std::vector<double> a(static_cast<std::size_t>(k) + 1), b(a.size());
      for (double& v : a) v = u(rng);
      for (double& v : b) v = u(rng);
      fj.emplace_back(Point{x}, k, std::move(a));
      gj.emplace_back(Point{x}, k, std::move(b));
      x += step(rng);
    }
    const WhitneyField f(1, k, std::move(fj)), g(1, k, std::move(gj));
    const double a = u(rng), b = u(rng);
    const HermiteExtension1D hf(f), hg(g), hc(f.Combine(a, g, b));
    double worst = 0.0;
    for (int q = 0; q < 5; ++q) {
      const double y = 2 * u(rng);
      for (int d = 0; d <= k; ++d) {
        const double expect = a * hf.Derivative(y, d) + b * hg.Derivative(y, d);
        worst = std::max(worst, std::abs(hc.Derivative(y, d) - expect) / (1.0 + std::abs(expect)));
      }
    }
    r.Record(worst <= 1e-10, worst, "hermite linearity");
  }
  return r;
}

}  // namespace ckw::testing

#endif  // CKW_TESTS_PROPERTY_CHECKS_HPP_
