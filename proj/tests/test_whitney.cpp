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

#include <cmath>
#include <random>

#include "ckw/error.hpp"
#include "ckw/whitney.hpp"
#include "faa_check.hpp"
#include "support.hpp"

using namespace ckw;
using ckw::testing::kSeed;

namespace {

// Independent evaluation of the pairwise constant straight from its
// definition, with the Taylor polynomial expanded term by term.
double LambdaOracle(const WhitneyField& f, const NormContext& ctx) {
  const MultiIndexSet set(ctx.n, ctx.k);
  double best = 0.0;
  for (const Jet& j : f.jets()) {
    for (std::size_t a = 0; a < set.size(); ++a) best = std::max(best, std::abs(j[a]));
  }
  for (std::size_t p = 0; p < f.size(); ++p) {
    for (std::size_t q = p + 1; q < f.size(); ++q) {
      const Jet& x = f.jet(p);
      const Jet& y = f.jet(q);
      const double d = Distance(x.base(), y.base());
      for (const Jet* zj : {&x, &y}) {
        const Point& z = zj->base();
        for (std::size_t a = 0; a < set.size(); ++a) {
          double tx = 0.0, ty = 0.0;
          for (std::size_t b = 0; b < set.size(); ++b) {
            if (!set[b].Dominates(set[a])) continue;
            const MultiIndex g = set[b] - set[a];
            double px = 1.0, py = 1.0;
            for (int i = 0; i < ctx.n; ++i) {
              px *= std::pow(z[i] - x.base()[i], g[i]);
              py *= std::pow(z[i] - y.base()[i], g[i]);
            }
            tx += x[b] * px / g.Factorial();
            ty += y[b] * py / g.Factorial();
          }
          const double v = std::abs(tx - ty) / (std::pow(d, ctx.k - set[a].order()) * ctx.omega(d));
          best = std::max(best, v);
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("whitney") {

TEST_CASE("two-point k = 0 field") {
  const std::vector<double> v{0.0, 1.0};
  const WhitneyField f = WhitneyField::FromValues({{0.0}, {2.0}}, v);
  const LambdaReport r = WhitneyLambda(f, {0, 1, Modulus::Linear()});
  CHECK(r.lambda_sup == 1.0);
  CHECK(r.lambda_osc == 0.5);
  CHECK(r.lambda == 1.0);
  CHECK(r.sup_point == 1);
  CHECK(r.has_pair);
}

TEST_CASE("jets of an affine function have zero oscillation") {
  const WhitneyField f(1, 1, {Jet({0.0}, 1, {0.0, 1.0}), Jet({1.0}, 1, {1.0, 1.0})});
  const LambdaReport r = WhitneyLambda(f, {1, 1, Modulus::Linear()});
  CHECK(r.lambda_osc == doctest::Approx(0.0));
  CHECK(r.lambda == 1.0);
}

TEST_CASE("single point has no pair term") {
  const WhitneyField f(2, 1, {Jet({0.0, 0.0}, 1, {0.5, -2.0, 1.0})});
  const LambdaReport r = WhitneyLambda(f, {1, 2, Modulus::Linear()});
  CHECK_FALSE(r.has_pair);
  CHECK(r.lambda == 2.0);
  CHECK(r.sup_alpha == MultiIndex{1, 0});
}

TEST_CASE("pairwise constant agrees with a direct oracle") {
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 3, k = trial % 3;
    const NormContext ctx{k, n, trial % 2 ? Modulus::Power(0.5) : Modulus::Linear()};
    const WhitneyField f = ckw::testing::RandomField(rng, 6, n, k);
    CHECK(WhitneyLambda(f, ctx).lambda == doctest::Approx(LambdaOracle(f, ctx)).epsilon(1e-12));
  }
}

TEST_CASE("duplicate points are rejected with the point named") {
  const std::vector<double> v{0.0, 1.0};
  try {
    WhitneyField::FromValues({{0.25}, {0.25}}, v);
    FAIL("expected an InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("0.25") != std::string::npos);
  }
}

TEST_CASE("sampled norm of sin with k = 0 and linear modulus") {
  const SmoothFunction f{1, 2, [](std::span<const double> x, const MultiIndex& a) {
                           return std::sin(x[0] + a.order() * M_PI / 2);
                         }};
  std::vector<Point> grid;
  for (int i = 0; i <= 200; ++i) grid.push_back({-M_PI + 2 * M_PI * i / 200});
  const auto pairs = AllPairs(grid);
  const NormEstimate e = CkNormEstimate(f, {0, 1, Modulus::Linear()}, grid, pairs);
  CHECK(e.sup_part == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(e.seminorm_part <= 1.0);
  CHECK(e.seminorm_part > 0.99);
  const NormEstimate e1 = CkNormEstimate(f, {1, 1, Modulus::Linear()}, grid, pairs);
  CHECK(e1.seminorm_part <= 1.0);
  CHECK(e1.sup_part == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("norm estimate input checks") {
  const SmoothFunction f{1, 0, [](std::span<const double>, const MultiIndex&) { return NAN; }};
  const std::vector<Point> grid{{0.0}, {1.0}};
  const std::vector<PointPair> same{{{0.0}, {0.0}}};
  CHECK_THROWS_AS(CkNormEstimate(f, {0, 1, Modulus::Linear()}, grid, {}), NumericalError);
  CHECK_THROWS_AS(CkNormEstimate(f, {1, 1, Modulus::Linear()}, grid, {}), InputError);
  const SmoothFunction g{1, 0, [](std::span<const double>, const MultiIndex&) { return 1.0; }};
  CHECK_THROWS_AS(CkNormEstimate(g, {0, 1, Modulus::Linear()}, grid, same), InputError);
}

TEST_CASE("pullback derivatives agree with finite differences") {
  CHECK(ckw::testing::FaaDiBrunoWorstError(20, kSeed + 1) <= 1e-5);
}

}  // TEST_SUITE
