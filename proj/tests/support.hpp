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

#ifndef CKW_TESTS_SUPPORT_HPP_
#define CKW_TESTS_SUPPORT_HPP_

#include <cmath>
#include <random>
#include <vector>

#include "ckw/jet.hpp"

namespace ckw::testing {

inline constexpr std::uint64_t kSeed = 20260116;

inline Point RandomPoint(std::mt19937_64& rng, int n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Point p(static_cast<std::size_t>(n));
  for (double& v : p) v = u(rng);
  return p;
}

inline WhitneyField RandomField(std::mt19937_64& rng, int points, int n, int k,
                                double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<Jet> jets;
  const std::size_t q = NumMultiIndices(n, k);
  for (int i = 0; i < points; ++i) {
    std::vector<double> c(q);
    for (double& v : c) v = u(rng);
    jets.emplace_back(RandomPoint(rng, n), k, std::move(c));
  }
  return WhitneyField(n, k, std::move(jets));
}

// Central difference of g at x along e_i with step h (fourth order).
template <class G>
double CentralDifference(G&& g, Point x, int i, double h) {
  auto at = [&](double s) {
    Point y = x;
    y[static_cast<std::size_t>(i)] += s;
    return g(y);
  };
  return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
}

}  // namespace ckw::testing

#endif  // CKW_TESTS_SUPPORT_HPP_
