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

// Serial reference vs OpenMP kernels on the hot loops.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "ckw/extension.hpp"
#include "ckw/jackson.hpp"
#include "ckw/predual.hpp"
#include "ckw/whitney.hpp"

namespace {

using ckw::Execution;

ckw::WhitneyField RandomField(int points, int n, int k, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<ckw::Jet> jets;
  const std::size_t q = ckw::NumMultiIndices(n, k);
  for (int i = 0; i < points; ++i) {
    ckw::Point x(static_cast<std::size_t>(n));
    for (double& v : x) v = u(rng);
    std::vector<double> c(q);
    for (double& v : c) v = u(rng);
    jets.emplace_back(std::move(x), k, std::move(c));
  }
  return ckw::WhitneyField(n, k, std::move(jets));
}

Execution ExecOf(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_WhitneyLambda(benchmark::State& state) {
  const auto field = RandomField(400, 2, 1, 1);
  const ckw::NormContext ctx{1, 2, ckw::Modulus::Power(0.5)};
  for (auto _ : state) benchmark::DoNotOptimize(ckw::WhitneyLambda(field, ctx, ExecOf(state)).lambda);
}
BENCHMARK(BM_WhitneyLambda)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_McShaneBatch(benchmark::State& state) {
  const auto field = RandomField(300, 3, 0, 2);
  const ckw::McShaneExtension ext(field, ckw::Modulus::Linear());
  std::vector<ckw::Point> grid;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j)
      for (int l = 0; l < 20; ++l) grid.push_back({-1.0 + i * 0.1, -1.0 + j * 0.1, -1.0 + l * 0.1});
  for (auto _ : state) benchmark::DoNotOptimize(ext.EvaluateBatch(grid, ExecOf(state)));
}
BENCHMARK(BM_McShaneBatch)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_FinitenessSubsets(benchmark::State& state) {
  // Data where no pair attains the full norm forces full enumeration.
  const auto field = RandomField(60, 2, 1, 3);
  const ckw::NormContext ctx{1, 2, ckw::Modulus::Linear()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(ckw::FinitenessGap(field, 2, ctx, ExecOf(state)).subset_sup);
  }
}
BENCHMARK(BM_FinitenessSubsets)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_JacksonBatch(benchmark::State& state) {
  const ckw::SmoothingOperator op(ckw::Periodization(ckw::SmoothFunction{1, 2,
      [](std::span<const double> x, const ckw::MultiIndex& a) {
        return a.order() == 0 ? std::exp(-x[0] * x[0]) : 0.0;
      }}, 2), 32);
  std::vector<ckw::Point> pts;
  for (int i = 0; i < 64; ++i) pts.push_back({-4.0 + i * 0.125});
  const ckw::MultiIndex zero = ckw::MultiIndex::Zero(1);
  for (auto _ : state) benchmark::DoNotOptimize(op.EvaluateBatch(pts, zero, ExecOf(state)));
}
BENCHMARK(BM_JacksonBatch)->Arg(0)->Arg(1)->ArgName("parallel");

}  // namespace

BENCHMARK_MAIN();
