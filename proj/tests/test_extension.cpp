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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ckw/error.hpp"
#include "ckw/extension.hpp"
#include "support.hpp"

using namespace ckw;
using ckw::testing::kSeed;

namespace {

// Random 1D field with knots at least `gap` apart.
WhitneyField SpacedField(std::mt19937_64& rng, int points, int k, double gap) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), step(gap, 3 * gap);
  std::vector<Jet> jets;
  double x = u(rng);
  for (int i = 0; i < points; ++i) {
    std::vector<double> c(static_cast<std::size_t>(k) + 1);
    for (double& v : c) v = u(rng);
    jets.emplace_back(Point{x}, k, std::move(c));
    x += step(rng);
  }
  return WhitneyField(1, k, std::move(jets));
}

// A jump in F^(j) at x leaves the one-sided difference at x +- eps
// independent of eps; continuity makes it shrink linearly with eps.
bool NoJump(const HermiteExtension1D& h, double x, int k) {
  auto spread = [&](double eps) {
    const std::vector<double> l = h.Evaluate(x - eps), r = h.Evaluate(x + eps);
    std::vector<double> d(l.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = std::abs(r[j] - l[j]);
    return d;
  };
  const std::vector<double> coarse = spread(1e-7), fine = spread(1e-9);
  for (int j = 0; j <= k; ++j) {
    const auto i = static_cast<std::size_t>(j);
    if (fine[i] > 0.02 * coarse[i] + 1e-8) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("extension") {

TEST_CASE("two-point examples") {
  const std::vector<double> v{0.0, 1.0};
  const WhitneyField f = WhitneyField::FromValues({{0.0}, {1.0}}, v);
  const McShaneExtension m(f, Modulus::Linear());
  const double half[1] = {0.5}, far[1] = {5.0};
  CHECK(m(half) == 0.5);
  CHECK(m(far) == 1.0);
  CHECK(m.lambda() == 1.0);
  CHECK(m.trace_norm() == 1.0);

  const HermiteExtension1D h(f);
  CHECK(h(0.25) == doctest::Approx(0.25).epsilon(1e-15));

  const WhitneyField z(1, 1, {Jet({0.0}, 1, {0.0, 0.0}), Jet({1.0}, 1, {0.0, 0.0})});
  const HermiteExtension1D hz(z);
  for (int i = 0; i <= 10; ++i) CHECK(hz(i / 10.0) == 0.0);
}

TEST_CASE("single point gives the Taylor polynomial nearby") {
  const WhitneyField f(1, 2, {Jet({0.5}, 2, {1.0, -2.0, 3.0})});
  const HermiteExtension1D h(f);
  for (double x : {-0.4, 0.1, 0.5, 1.2, 1.5}) {
    const double d = x - 0.5;
    CHECK(h(x) == doctest::Approx(1.0 - 2.0 * d + 1.5 * d * d).epsilon(1e-13));
    CHECK(h.Derivative(x, 1) == doctest::Approx(-2.0 + 3.0 * d).epsilon(1e-13));
  }
  // Frozen far away.
  CHECK(h(10.0) == 0.0);
  CHECK_THROWS_AS(HermiteExtension1D(WhitneyField(1, 0, {})), InputError);
  CHECK_THROWS_AS(McShaneExtension(WhitneyField(1, 0, {}), Modulus::Linear()), InputError);
  std::mt19937_64 rng(kSeed);
  CHECK_THROWS_AS(HermiteExtension1D(ckw::testing::RandomField(rng, 2, 2, 0)), InputError);
}

TEST_CASE("McShane extension interpolates and preserves the trace norm") {
  std::mt19937_64 rng(kSeed + 21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const Modulus omega = trial % 2 ? Modulus::Power(0.5) : Modulus::Linear();
    const WhitneyField f = ckw::testing::RandomField(rng, 5 + trial % 26, n, 0);
    for (McShaneMode mode : {McShaneMode::kMin, McShaneMode::kMax, McShaneMode::kAverage}) {
      const McShaneExtension m(f, omega, mode);
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(m(f.point(i)) == f.jet(i)[0]);
      std::vector<Point> queries;
      for (int q = 0; q < 120; ++q) queries.push_back(ckw::testing::RandomPoint(rng, n, -2.0, 2.0));
      const std::vector<double> values = m.EvaluateBatch(queries);
      std::vector<Point> all = queries;
      std::vector<double> all_values = values;
      for (std::size_t i = 0; i < f.size(); ++i) {
        all.push_back(f.point(i));
        all_values.push_back(f.jet(i)[0]);
      }
      const LambdaReport r = WhitneyLambda(WhitneyField::FromValues(all, all_values), {0, n, omega});
      CHECK(r.lambda <= m.trace_norm() + 1e-9);
      const LambdaReport data = WhitneyLambda(f, {0, n, omega});
      CHECK(m.trace_norm() == doctest::Approx(data.lambda).epsilon(1e-15));
    }
  }
}

TEST_CASE("Hermite extension reproduces jets and is C^k across knots") {
  std::mt19937_64 rng(kSeed + 22);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = trial % 4;
    const WhitneyField f = SpacedField(rng, 2 + trial % 5, k, 0.2);
    const HermiteExtension1D h(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double x = f.point(i)[0];
      const std::vector<double> at = h.Evaluate(x);
      for (int j = 0; j <= k; ++j) CHECK(at[static_cast<std::size_t>(j)] == f.jet(i)[static_cast<std::size_t>(j)]);
      CHECK(NoJump(h, x, k));
    }
    // Continuity where the tails switch on.
    for (double x : {f.point(0)[0] - 1.0, f.point(f.size() - 1)[0] + 2.0}) {
      CHECK(NoJump(h, x, k));
    }
  }
}

TEST_CASE("Hermite derivatives agree with finite differences") {
  std::mt19937_64 rng(kSeed + 23);
  const WhitneyField f = SpacedField(rng, 4, 2, 0.3);
  const HermiteExtension1D h(f);
  std::uniform_real_distribution<double> u(f.point(0)[0] - 2.5, f.point(3)[0] + 2.5);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = u(rng);
    for (int m = 1; m <= 2; ++m) {
      const double fd = ckw::testing::CentralDifference([&](const Point& p) { return h.Derivative(p[0], m - 1); },
                                                        {x}, 0, 1e-4);
      CHECK(h.Derivative(x, m) == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
    }
  }
}

TEST_CASE("Hermite extension is linear in the data") {
  std::mt19937_64 rng(kSeed + 24);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = trial % 3;
    const WhitneyField f = SpacedField(rng, 4, k, 0.25);
    std::vector<Jet> jets;
    for (const Jet& j : f.jets()) {
      std::vector<double> c(j.coefficients().size());
      for (double& v : c) v = u(rng);
      jets.emplace_back(j.base(), k, std::move(c));
    }
    const WhitneyField g(1, k, std::move(jets));
    const double a = u(rng), b = u(rng);
    const HermiteExtension1D hf(f), hg(g), hc(f.Combine(a, g, b));
    for (int q = 0; q < 20; ++q) {
      const double x = u(rng) * 2;
      for (int m = 0; m <= k; ++m) {
        const double expect = a * hf.Derivative(x, m) + b * hg.Derivative(x, m);
        CHECK(std::abs(hc.Derivative(x, m) - expect) <= 1e-10 * (1.0 + std::abs(expect)));
      }
    }
  }
}

TEST_CASE("Hermite distortion constant is finite and stable") {
  std::mt19937_64 rng(kSeed + 25);
  for (int k = 0; k <= 3; ++k) {
    const NormContext ctx{k, 1, Modulus::Linear()};
    double worst = 0.0, best = INFINITY;
    for (int trial = 0; trial < 10; ++trial) {
      WhitneyField f = SpacedField(rng, 5, k, 0.3);
      f = f.Scaled(1.0 / WhitneyLambda(f, ctx).lambda);
      const HermiteExtension1D h(f);
      std::vector<Point> grid;
      const double lo = f.point(0)[0] - 2.5, hi = f.point(f.size() - 1)[0] + 2.5;
      for (int i = 0; i <= 300; ++i) grid.push_back({lo + (hi - lo) * i / 300});
      const auto pairs = AllPairs(grid);
      const double c = CkNormEstimate(h.AsFunction(), ctx, grid, pairs).norm;
      CHECK(std::isfinite(c));
      CHECK(c >= 1.0 - 1e-9);
      worst = std::max(worst, c);
      best = std::min(best, c);
    }
    MESSAGE("k = " << k << ": empirical distortion in [" << best << ", " << worst << "]");
    CHECK(worst <= 100.0 * best);
  }
}

TEST_CASE("depth audit") {
  const std::vector<double> v{2.0, 5.0, -1.0};
  const WhitneyField f = WhitneyField::FromValues({{0.0}, {1.0}, {3.0}}, v);
  const HermiteExtension1D h(f);
  const DepthRecord gap = DepthAudit(h, 1.5);
  REQUIRE(gap.linear);
  REQUIRE(gap.depth == 2);
  CHECK(gap.active[0].point == 1.0);
  CHECK(gap.active[0].weights[0] == doctest::Approx(0.75));
  CHECK(gap.active[1].point == 3.0);
  CHECK(gap.active[1].weights[0] == doctest::Approx(0.25));
  CHECK(gap.reproduces_constants);

  const DepthRecord knot = DepthAudit(h, 1.0);
  REQUIRE(knot.depth == 1);
  CHECK(knot.active[0].weights[0] == 1.0);

  const double x[1] = {0.5};
  CHECK_FALSE(DepthAudit(McShaneExtension(f, Modulus::Linear()), x).linear);

  std::mt19937_64 rng(kSeed + 26);
  for (int k = 0; k <= 3; ++k) {
    const WhitneyField g = SpacedField(rng, 6, k, 0.2);
    const HermiteExtension1D hk(g);
    std::uniform_real_distribution<double> u(g.point(0)[0] - 3, g.point(5)[0] + 3);
    for (int q = 0; q < 50; ++q) {
      const double y = u(rng);
      const DepthRecord r = DepthAudit(hk, y);
      CHECK(r.depth <= static_cast<std::size_t>(2 * (k + 1)));
      if (y >= g.point(0)[0] && y <= g.point(5)[0]) CHECK(r.reproduces_constants);
      double sum = 0.0;
      for (const DepthEntry& e : r.active) {
        for (int j = 0; j <= k; ++j) sum += e.weights[static_cast<std::size_t>(j)] * g.jet(e.knot)[static_cast<std::size_t>(j)];
      }
      CHECK(sum == doctest::Approx(hk(y)).epsilon(1e-12).scale(1.0));
    }
  }
}

}  // TEST_SUITE
