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

#include "property_checks.hpp"

using namespace ckw::testing;

namespace {

constexpr int kTrials = 1000;

void Report(const PropertyResult& r) {
  INFO(r.first_failure);
  CHECK(r.trials == kTrials);
  CHECK(r.ok());
  MESSAGE(r.trials << " trials, worst violation " << r.worst);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("whitney_lambda is a norm") { Report(LambdaNormAxioms(kTrials, kSeed + 61)); }

TEST_CASE("predual_norm_k0 is a norm") { Report(PredualNormAxioms(kTrials, kSeed + 62)); }

TEST_CASE("LP duality gap closes") { Report(LpDualityGap(kTrials, kSeed + 63)); }

TEST_CASE("subset supremum is monotone") { Report(SubsetMonotonicity(kTrials, kSeed + 64)); }

TEST_CASE("hermite extension is linear") { Report(HermiteLinearity(kTrials, kSeed + 65)); }

}  // TEST_SUITE
