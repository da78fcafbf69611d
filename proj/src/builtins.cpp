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

#include "ckw/builtins.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "ckw/cutoff.hpp"
#include "ckw/error.hpp"

namespace ckw {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;

double Sum(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

// Physicists' Hermite polynomial H_m(t).
double Hermite(int m, double t) {
  double prev = 1.0, cur = 2.0 * t;
  if (m == 0) return prev;
  for (int j = 1; j < m; ++j) {
    const double next = 2.0 * t * cur - 2.0 * j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

constexpr int kUnbounded = 64;

}  // namespace

std::vector<std::string> BuiltinFunctionNames() {
  return {"zero", "one", "sin", "cos", "poly", "gauss", "bump", "abs_sin"};
}

SmoothFunction BuiltinFunction(const std::string& name, int n) {
  if (n < 1) throw InputError("builtin function needs n >= 1");
  if (name == "zero") {
    return {n, kUnbounded, [](std::span<const double>, const MultiIndex&) { return 0.0; }};
  }
  if (name == "one") {
    return {n, kUnbounded,
            [](std::span<const double>, const MultiIndex& a) { return a.order() == 0 ? 1.0 : 0.0; }};
  }
  if (name == "sin") {
    return {n, kUnbounded, [](std::span<const double> x, const MultiIndex& a) {
              return std::sin(Sum(x) + a.order() * kHalfPi);
            }};
  }
  if (name == "cos") {
    return {n, kUnbounded, [](std::span<const double> x, const MultiIndex& a) {
              return std::cos(Sum(x) + a.order() * kHalfPi);
            }};
  }
  if (name == "poly") {
    return {n, kUnbounded, [](std::span<const double> x, const MultiIndex& a) {
              const double s = Sum(x);
              switch (a.order()) {
                case 0:
                  return 1.0 + s + 0.5 * s * s;
                case 1:
                  return 1.0 + s;
                case 2:
                  return 1.0;
                default:
                  return 0.0;
              }
            }};
  }
  if (name == "gauss") {
    return {n, kUnbounded, [](std::span<const double> x, const MultiIndex& a) {
              double v = 1.0;
              for (std::size_t i = 0; i < x.size(); ++i) {
                const int m = a[static_cast<int>(i)];
                v *= (m % 2 ? -1.0 : 1.0) * Hermite(m, x[i]) * std::exp(-x[i] * x[i]);
              }
              return v;
            }};
  }
  if (name == "bump") {
    return {n, MollifiedStep::kMaxDerivative, [](std::span<const double> x, const MultiIndex& a) {
              const MollifiedStep& chi = MollifiedStep::Instance();
              double v = 1.0;
              for (std::size_t i = 0; i < x.size(); ++i) {
                const int m = a[static_cast<int>(i)];
                v *= chi.Derivative(2.0 * x[i], m) * std::ldexp(1.0, m);
              }
              return v;
            }};
  }
  if (name == "abs_sin") {
    if (n != 1) throw InputError("abs_sin is one-dimensional");
    return {1, 0, [](std::span<const double> x, const MultiIndex&) { return std::abs(std::sin(x[0])); }};
  }
  throw InputError("unknown builtin function '" + name + "'");
}

SmoothFunction TableFunction1D(std::vector<double> xs, std::vector<double> fs) {
  if (xs.empty() || xs.size() != fs.size()) throw InputError("table needs matching nonempty x and f");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(fs[i])) throw InputError("table values must be finite");
    if (i > 0 && !(xs[i] > xs[i - 1])) throw InputError("table x must be strictly increasing");
  }
  auto x = std::make_shared<std::vector<double>>(std::move(xs));
  auto f = std::make_shared<std::vector<double>>(std::move(fs));
  return {1, 0, [x, f](std::span<const double> p, const MultiIndex&) {
            const double t = p[0];
            if (t <= x->front()) return f->front();
            if (t >= x->back()) return f->back();
            const auto it = std::upper_bound(x->begin(), x->end(), t);
            const std::size_t i = static_cast<std::size_t>(it - x->begin());
            const double s = (t - (*x)[i - 1]) / ((*x)[i] - (*x)[i - 1]);
            return (1.0 - s) * (*f)[i - 1] + s * (*f)[i];
          }};
}

}  // namespace ckw
