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
#include "ckw/lp.hpp"
#include "support.hpp"
#include "vertex_oracle.hpp"

using namespace ckw;
using namespace ckw::lp;

using ckw::testing::VertexEnumeration;

TEST_SUITE("lp") {

TEST_CASE("single bound") {
  LinearProgram p(1, Sense::kMaximize);
  p.SetObjective(0, 1.0);
  const std::vector<double> row{1.0};
  p.AddRow(row, RowType::kLessEqual, 1.0);
  const Solution s = Solve(p);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.optimum == doctest::Approx(1.0));
  CHECK(s.dual[0] == doctest::Approx(1.0));
}

TEST_CASE("no constraints is unbounded") {
  LinearProgram p(1, Sense::kMaximize);
  p.SetObjective(0, 1.0);
  CHECK(Solve(p).status == Status::kUnbounded);
}

TEST_CASE("box vertex") {
  LinearProgram p(2, Sense::kMaximize);
  const std::vector<double> c{1.0, 1.0};
  p.SetObjective(c);
  p.AddRow(c, RowType::kLessEqual, 2.0);
  p.AddRow(std::vector<double>{1.0, 0.0}, RowType::kLessEqual, 1.0);
  p.AddRow(std::vector<double>{0.0, 1.0}, RowType::kLessEqual, 1.0);
  const Solution s = Solve(p);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.optimum == doctest::Approx(2.0));
}

TEST_CASE("infeasible system") {
  LinearProgram p(1, Sense::kMinimize);
  p.SetObjective(0, 1.0);
  p.AddRow(std::vector<double>{1.0}, RowType::kGreaterEqual, 2.0);
  p.AddRow(std::vector<double>{1.0}, RowType::kLessEqual, 1.0);
  CHECK(Solve(p).status == Status::kInfeasible);
}

TEST_CASE("free variables, equalities and absolute rows") {
  // min |x - 3| + |y + 1| s.t. x + y = 1 written with t >= |.|.
  LinearProgram p(4, Sense::kMinimize);
  p.SetFree(0);
  p.SetFree(1);
  p.SetObjective(2, 1.0);
  p.SetObjective(3, 1.0);
  p.AddRow(std::vector<double>{1.0, 1.0, 0.0, 0.0}, RowType::kEqual, 1.0);
  p.AddRow(std::vector<double>{1.0, 0.0, -1.0, 0.0}, RowType::kLessEqual, 3.0);
  p.AddRow(std::vector<double>{-1.0, 0.0, -1.0, 0.0}, RowType::kLessEqual, -3.0);
  p.AddRow(std::vector<double>{0.0, 1.0, 0.0, -1.0}, RowType::kLessEqual, -1.0);
  p.AddRow(std::vector<double>{0.0, -1.0, 0.0, -1.0}, RowType::kLessEqual, 1.0);
  const Solution s = Solve(p);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.optimum == doctest::Approx(1.0));
}

TEST_CASE("negative lower bounds") {
  LinearProgram p(1, Sense::kMinimize);
  p.SetObjective(0, 1.0);
  p.SetBounds(0, -2.5, 4.0);
  const Solution s = Solve(p);
  REQUIRE(s.status == Status::kOptimal);
  CHECK(s.optimum == -2.5);
}

TEST_CASE("dimension guard") {
  CHECK_THROWS_AS(LinearProgram(kMaxDimension + 1, Sense::kMaximize), SizeError);
}

TEST_CASE("random small programs match vertex enumeration and close the duality gap") {
  std::mt19937_64 rng(ckw::testing::kSeed + 7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6, rows = 1 + trial % 4;
    LinearProgram p(n, trial % 2 ? Sense::kMaximize : Sense::kMinimize);
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(rows + 2 * n, n);
    Eigen::VectorXd h(rows + 2 * n), c(n);
    for (int j = 0; j < n; ++j) c(j) = u(rng);
    p.SetObjective(std::vector<double>(c.data(), c.data() + n));
    for (int i = 0; i < rows; ++i) {
      std::vector<double> a(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) G(i, j) = a[static_cast<std::size_t>(j)] = u(rng);
      h(i) = 0.5 + std::abs(u(rng));
      p.AddRow(a, RowType::kLessEqual, h(i));
    }
    for (int j = 0; j < n; ++j) {
      const double lo = -1.0 - std::abs(u(rng)), hi = 1.0 + std::abs(u(rng));
      p.SetBounds(j, lo, hi);
      G(rows + 2 * j, j) = 1.0;
      h(rows + 2 * j) = hi;
      G(rows + 2 * j + 1, j) = -1.0;
      h(rows + 2 * j + 1) = -lo;
    }
    const Solution s = Solve(p);
    REQUIRE(s.status == Status::kOptimal);
    const double sign = p.sense() == Sense::kMaximize ? 1.0 : -1.0;
    const double oracle = sign * VertexEnumeration(G, h, sign * c);
    CHECK(s.optimum == doctest::Approx(oracle).epsilon(1e-8));
    CHECK(std::abs(s.optimum - s.dual_optimum) <= 1e-7 * (1.0 + std::abs(s.optimum)));
    CHECK(s.primal_residual <= 1e-9);
    CHECK(s.complementarity <= 1e-7);
  }
}

TEST_CASE("identical programs give identical results") {
  LinearProgram p(3, Sense::kMaximize);
  p.SetObjective(std::vector<double>{1.0, 1.0, 1.0});
  p.AddRow(std::vector<double>{1.0, 1.0, 0.0}, RowType::kLessEqual, 1.0);
  p.AddRow(std::vector<double>{0.0, 1.0, 1.0}, RowType::kLessEqual, 1.0);
  p.AddRow(std::vector<double>{1.0, 0.0, 1.0}, RowType::kLessEqual, 1.0);
  const Solution a = Solve(p), b = Solve(p);
  CHECK(a.iterations == b.iterations);
  CHECK(a.primal == b.primal);
  CHECK(a.dual == b.dual);
  CHECK(a.optimum == doctest::Approx(1.5));
}

}  // TEST_SUITE
