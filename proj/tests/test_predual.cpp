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
#include "ckw/predual.hpp"
#include "support.hpp"
#include "vertex_oracle.hpp"

using namespace ckw;
using ckw::testing::kSeed;

namespace {

AtomicFunctional RandomDeltas(std::mt19937_64& rng, int points, int n, const Modulus& omega) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  AtomicFunctional g({0, n, omega});
  for (int i = 0; i < points; ++i) g.Add(DeltaAtom{ckw::testing::RandomPoint(rng, n, -1.5, 1.5), MultiIndex::Zero(n)}, u(rng));
  return g;
}

// Brute-force maximum of sum c_i u_i over the Lipschitz-omega unit ball on
// the support.
double K0Oracle(const AtomicFunctional& g, const Modulus& omega) {
  const std::vector<Point> s = g.Support();
  const int m = static_cast<int>(s.size());
  Eigen::VectorXd c = Eigen::VectorXd::Zero(m);
  for (const auto& [atom, coef] : g.terms()) {
    const Point& x = std::get<DeltaAtom>(atom).x;
    c(static_cast<int>(std::find(s.begin(), s.end(), x) - s.begin())) += coef;
  }
  const int rows = 2 * m + m * (m - 1);
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(rows, m);
  Eigen::VectorXd h(rows);
  int r = 0;
  for (int i = 0; i < m; ++i) {
    G(r, i) = 1.0;
    h(r++) = 1.0;
    G(r, i) = -1.0;
    h(r++) = 1.0;
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      G(r, i) = 1.0;
      G(r, j) = -1.0;
      h(r++) = omega(Distance(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]));
    }
  }
  return ckw::testing::VertexEnumeration(G, h, c);
}

}  // namespace

TEST_SUITE("predual") {

TEST_CASE("pairing examples") {
  const NormContext ctx{0, 1, Modulus::Linear()};
  const SmoothFunction id{1, 0, [](std::span<const double> x, const MultiIndex&) { return x[0]; }};
  const SmoothFunction one{1, 0, [](std::span<const double>, const MultiIndex&) { return 1.0; }};

  AtomicFunctional e(ctx);
  e.Add(DeltaAtom{{0.7}, MultiIndex{0}}, 1.0);
  CHECK(Pair(id, e) == 0.7);

  AtomicFunctional d(ctx);
  d.Add(DifferenceAtom{{0.0}, {1.0}, MultiIndex{0}}, 1.0);
  CHECK(Pair(id, d) == -1.0);
  // Reversed endpoints are the negated atom.
  AtomicFunctional r(ctx);
  r.Add(DifferenceAtom{{1.0}, {0.0}, MultiIndex{0}}, -1.0);
  CHECK(r.terms().size() == 1);
  CHECK(Pair(id, r) == -1.0);

  AtomicFunctional s(ctx);
  s.Add(DeltaAtom{{0.0}, MultiIndex{0}}, 2.0).Add(DeltaAtom{{1.0}, MultiIndex{0}}, 3.0);
  CHECK(Pair(one, s) == 5.0);

  const std::vector<double> v{4.0, -1.0};
  const WhitneyField f = WhitneyField::FromValues({{0.0}, {1.0}}, v);
  CHECK(Pair(f, s) == 5.0);
  AtomicFunctional missing(ctx);
  missing.Add(DeltaAtom{{0.5}, MultiIndex{0}}, 1.0);
  CHECK_THROWS_AS(Pair(f, missing), InputError);
}

TEST_CASE("atoms are validated, merged and cancelled") {
  AtomicFunctional g({1, 2, Modulus::Linear()});
  CHECK_THROWS_AS(g.Add(DeltaAtom{{0.0, 0.0}, MultiIndex{2, 0}}, 1.0), InputError);
  CHECK_THROWS_AS(g.Add(DifferenceAtom{{0.0, 0.0}, {1.0, 0.0}, MultiIndex{0, 0}}, 1.0), InputError);
  CHECK_THROWS_AS(g.Add(DifferenceAtom{{0.0, 0.0}, {0.0, 0.0}, MultiIndex{1, 0}}, 1.0), InputError);
  g.Add(DeltaAtom{{0.0, 1.0}, MultiIndex{0, 1}}, 1.5);
  g.Add(DeltaAtom{{0.0, 1.0}, MultiIndex{0, 1}}, -1.5);
  CHECK(g.empty());
  g.Add(DifferenceAtom{{1.0, 0.0}, {0.0, 0.0}, MultiIndex{1, 0}}, 2.0);
  g.Add(DifferenceAtom{{0.0, 0.0}, {1.0, 0.0}, MultiIndex{1, 0}}, 0.5);
  REQUIRE(g.size() == 1);
  CHECK(g.terms()[0].second == -1.5);
  CHECK(g.Support().size() == 2);
}

TEST_CASE("k = 0 norm examples") {
  const Modulus lin = Modulus::Linear();
  AtomicFunctional a({0, 1, lin});
  a.Add(DeltaAtom{{0.3}, MultiIndex{0}}, 1.0);
  CHECK(PredualNormK0(a, lin).value == 1.0);

  AtomicFunctional b({0, 1, lin});
  b.Add(DeltaAtom{{0.0}, MultiIndex{0}}, 1.0).Add(DeltaAtom{{2.0}, MultiIndex{0}}, -1.0);
  CHECK(PredualNormK0(b, lin).value == doctest::Approx(2.0).epsilon(1e-12));

  AtomicFunctional c({0, 1, lin});
  c.Add(DeltaAtom{{0.0}, MultiIndex{0}}, 1.0).Add(DeltaAtom{{1.0}, MultiIndex{0}}, -1.0);
  CHECK(PredualNormK0(c, lin).value == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(PredualNormK0(AtomicFunctional({0, 1, lin}), lin).value == 0.0);

  AtomicFunctional k1({1, 1, lin});
  k1.Add(DeltaAtom{{0.0}, MultiIndex{1}}, 1.0);
  CHECK_THROWS_AS(PredualNormK0(k1, lin), UnsupportedError);
}

TEST_CASE("k = 0 norm matches vertex enumeration") {
  std::mt19937_64 rng(kSeed + 31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    const Modulus omega = trial % 2 ? Modulus::Power(0.5) : Modulus::Linear();
    const AtomicFunctional g = RandomDeltas(rng, 1 + trial % 4, n, omega);
    CHECK(PredualNormK0(g, omega).value == doctest::Approx(K0Oracle(g, omega)).epsilon(1e-8));
  }
}

TEST_CASE("difference atoms have norm at most one") {
  std::mt19937_64 rng(kSeed + 32);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 3;
    const Modulus omega = trial % 2 ? Modulus::Power(0.5) : Modulus::Linear();
    const Point x = ckw::testing::RandomPoint(rng, n, -2.0, 2.0), y = ckw::testing::RandomPoint(rng, n, -2.0, 2.0);
    AtomicFunctional g({0, n, omega});
    g.Add(DifferenceAtom{x, y, MultiIndex::Zero(n)}, 1.0);
    const double v = PredualNormK0(g, omega).value;
    const double w = omega(Distance(x, y));
    CHECK(v <= 1.0 + 1e-9);
    CHECK(v == doctest::Approx(std::min(1.0, 2.0 / w)).epsilon(1e-9));
  }
}

TEST_CASE("optimal vector extends to a norm-one function attaining the pairing") {
  std::mt19937_64 rng(kSeed + 33);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 3;
    const Modulus omega = trial % 2 ? Modulus::Power(0.5) : Modulus::Linear();
    const AtomicFunctional g = RandomDeltas(rng, 2 + trial % 3, n, omega);
    const PredualNormResult r = PredualNormK0(g, omega);
    const WhitneyField u = WhitneyField::FromValues(r.support, r.optimal_u);
    const McShaneExtension ext(u, omega);
    CHECK(ext.trace_norm() <= 1.0 + 1e-9);
    const SmoothFunction F{n, 0, [&](std::span<const double> x, const MultiIndex&) { return ext(x); }};
    CHECK(Pair(F, g) == doctest::Approx(r.value).epsilon(1e-8));

    // Any other feasible vector pairs to no more than the norm.
    std::uniform_real_distribution<double> coin(-1.0, 1.0);
    std::vector<double> w(r.support.size());
    for (double& v : w) v = coin(rng);
    const double lam = WhitneyLambda(WhitneyField::FromValues(r.support, w), {0, n, omega}).lambda;
    for (double& v : w) v /= std::max(1.0, lam);
    const McShaneExtension other(WhitneyField::FromValues(r.support, w), omega);
    const SmoothFunction G{n, 0, [&](std::span<const double> x, const MultiIndex&) { return other(x); }};
    CHECK(Pair(G, g) <= r.value + 1e-9);
  }
}

TEST_CASE("bracket examples") {
  const Modulus lin = Modulus::Linear();
  const PredualBracket zero = PredualNormBracket(AtomicFunctional({1, 1, lin}));
  CHECK(zero.lo == 0.0);
  CHECK(zero.hi == 0.0);

  for (int k = 0; k <= 2; ++k) {
    AtomicFunctional d({k, 2, lin});
    d.Add(DeltaAtom{{0.5, -0.5}, MultiIndex{k, 0}}, 1.0);
    const PredualBracket b = PredualNormBracket(d);
    CHECK(b.hi <= 1.0 + 1e-9);
    CHECK(b.lo <= b.hi + 1e-9);
  }

  AtomicFunctional g({1, 1, lin});
  g.Add(DifferenceAtom{{0.0}, {1.0}, MultiIndex{1}}, 1.0);
  const PredualBracket b = PredualNormBracket(g);
  CHECK(b.hi <= 1.0 + 1e-9);
  CHECK(b.lo <= 1.0 + 1e-9);
  CHECK(b.lo <= b.hi + 1e-9);
  CHECK(b.lo > 0.0);
  CHECK_FALSE(b.exact);

  std::mt19937_64 rng(kSeed + 34);
  for (int trial = 0; trial < 20; ++trial) {
    const AtomicFunctional h = RandomDeltas(rng, 3, 2, lin);
    const PredualBracket e = PredualNormBracket(h);
    CHECK(e.exact);
    CHECK(e.lo == e.hi);
    CHECK(e.lo == doctest::Approx(PredualNormK0(h, lin).value).epsilon(1e-12));
  }
}

TEST_CASE("random k >= 1 brackets are consistent") {
  std::mt19937_64 rng(kSeed + 35);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + trial % 2, n = 1 + trial % 2;
    AtomicFunctional g({k, n, Modulus::Linear()});
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i) pts.push_back(ckw::testing::RandomPoint(rng, n));
    const MultiIndexSet set(n, k);
    for (const Point& p : pts) {
      for (const MultiIndex& a : set) g.Add(DeltaAtom{p, a}, u(rng));
    }
    g.Add(DifferenceAtom{pts[0], pts[1], set[set.size() - 1]}, u(rng));
    const PredualBracket b = PredualNormBracket(g);
    CHECK(b.lo >= 0.0);
    CHECK(b.lo <= b.hi + 1e-9);
  }
}

TEST_CASE("finiteness gap examples") {
  std::mt19937_64 rng(kSeed + 36);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const NormContext ctx{0, n, trial % 2 ? Modulus::Power(0.5) : Modulus::Linear()};
    const FinitenessReport r = FinitenessGap(ckw::testing::RandomField(rng, 2 + trial, n, 0), 2, ctx);
    CHECK(std::abs(r.ratio - 1.0) <= 1e-9);
    CHECK(r.subset_sup <= r.full + 1e-9);
  }
  const FinitenessReport one = FinitenessGap(ckw::testing::RandomField(rng, 1, 2, 1), 3, {1, 2, Modulus::Linear()});
  CHECK(one.ratio == 1.0);

  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const FinitenessReport r = FinitenessGap(ckw::testing::RandomField(rng, 6, 1, 1), 3, {1, 1, Modulus::Linear()});
    CHECK(r.ratio >= 1.0 - 1e-12);
    worst = std::max(worst, r.ratio);
  }
  MESSAGE("largest k = 1, d = 3 ratio over 100 fields: " << worst);
  CHECK(std::isfinite(worst));

  const WhitneyField big = ckw::testing::RandomField(rng, 40, 1, 0);
  CHECK_THROWS_AS(FinitenessGap(big, 20, {0, 1, Modulus::Linear()}), SizeError);
  CHECK(SubsetCount(40, 20, kMaxSubsets) == kMaxSubsets + 1);
  CHECK(SubsetCount(10, 3, kMaxSubsets) == 120);
}

TEST_CASE("subset supremum is monotone in d") {
  std::mt19937_64 rng(kSeed + 37);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = trial % 2;
    const NormContext ctx{k, 1, Modulus::Linear()};
    const WhitneyField f = ckw::testing::RandomField(rng, 6, 1, k);
    double prev = 0.0;
    for (int d = 1; d <= 6; ++d) {
      const FinitenessReport r = FinitenessGap(f, d, ctx, Execution::kSerial);
      CHECK(r.subset_sup >= prev - 1e-12);
      CHECK(r.subset_sup <= r.full + 1e-9);
      prev = r.subset_sup;
    }
  }
}

}  // TEST_SUITE
