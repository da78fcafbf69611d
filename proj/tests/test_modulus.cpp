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

#include "ckw/error.hpp"
#include "ckw/modulus.hpp"

using namespace ckw;

TEST_SUITE("modulus") {

TEST_CASE("power and linear moduli evaluate in closed form") {
  CHECK(Modulus::Linear()(0.25) == 0.25);
  CHECK(Modulus::Power(0.5)(4.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(Modulus::Power(1.0)(3.0) == 3.0);
  CHECK(Modulus::Capped(0.5, 1.5)(4.0) == 1.5);
  CHECK(Modulus::Capped(0.5, 1.5)(1.0) == 1.0);
}

TEST_CASE("table modulus interpolates from the origin and is constant after the last breakpoint") {
  const Modulus w = Modulus::Table({{1.0, 2.0}, {3.0, 3.0}});
  CHECK(w(0.5) == doctest::Approx(1.0));
  CHECK(w(2.0) == doctest::Approx(2.5));
  CHECK(w(10.0) == 3.0);
}

TEST_CASE("nonpositive arguments are domain errors") {
  CHECK_THROWS_AS(Modulus::Linear()(0.0), DomainError);
  CHECK_THROWS_AS(Modulus::Power(0.3)(-1.0), DomainError);
  CHECK_THROWS_AS(Modulus::Linear()(NAN), DomainError);
}

TEST_CASE("constructors reject bad parameters") {
  CHECK_THROWS_AS(Modulus::Power(0.0), InputError);
  CHECK_THROWS_AS(Modulus::Power(1.5), InputError);
  CHECK_THROWS_AS(Modulus::Capped(0.5, 0.0), InputError);
  CHECK_THROWS_AS(Modulus::Table({}), InputError);
  CHECK_THROWS_AS(Modulus::Table({{1.0, 1.0}, {1.0, 2.0}}), InputError);
  CHECK_THROWS_AS(Modulus::Table({{0.0, 1.0}}), InputError);
}

TEST_CASE("valid moduli pass the default grid") {
  const auto grid = DefaultValidationGrid();
  CHECK(Validate(Modulus::Linear(), grid).ok());
  CHECK(Validate(Modulus::Power(0.5), grid).ok());
  CHECK(Validate(Modulus::Power(0.01), grid).ok());
  CHECK(Validate(Modulus::Capped(0.5, 2.0), grid).ok());
  CHECK(Validate(Modulus::Table({{1.0, 1.0}, {2.0, 1.5}}), grid).ok());
}

TEST_CASE("validation reports each violated axiom") {
  const auto grid = DefaultValidationGrid();
  SUBCASE("decreasing table") {
    const auto rep = Validate(Modulus::Table({{1.0, 2.0}, {2.0, 1.0}}), grid);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const auto& v : rep.violations) found |= v.axiom == ModulusAxiom::kNondecreasing;
    CHECK(found);
  }
  SUBCASE("superlinear growth breaks t/omega monotonicity") {
    // Convex piece: slope 1 then slope 3.
    const auto rep = Validate(Modulus::Table({{1.0, 1.0}, {2.0, 4.0}}), grid);
    bool found = false;
    for (const auto& v : rep.violations) found |= v.axiom == ModulusAxiom::kRatioNondecreasing;
    CHECK(found);
  }
}

TEST_CASE("grid preconditions") {
  const std::vector<double> one{1.0};
  const std::vector<double> unsorted{2.0, 1.0};
  const std::vector<double> negative{-1.0, 1.0};
  CHECK_THROWS_AS(Validate(Modulus::Linear(), one), InputError);
  CHECK_THROWS_AS(Validate(Modulus::Linear(), unsorted), InputError);
  CHECK_THROWS_AS(Validate(Modulus::Linear(), negative), InputError);
}

TEST_CASE("vanishing check finds a threshold for power moduli") {
  const auto grid = DefaultValidationGrid();
  const auto rep = Validate(Modulus::Power(0.5), grid);
  CHECK(rep.vanishing_threshold > 0.0);
  CHECK(Modulus::Power(0.5)(rep.vanishing_threshold) < rep.vanishing_epsilon);
}

TEST_CASE("reciprocal limit probe") {
  CHECK(LimitAtInfinityReciprocal(Modulus::Linear(), 1e12) == doctest::Approx(1e-12));
  CHECK(LimitAtInfinityReciprocal(Modulus::Capped(0.5, 2.0), 1e12) == 0.5);
  CHECK_THROWS_AS(LimitAtInfinityReciprocal(Modulus::Linear(), 0.5), InputError);
}

}  // TEST_SUITE
