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

#include "ckw/cutoff.hpp"

#include <algorithm>
#include <cmath>

#include "ckw/error.hpp"
#include "ckw/quadrature.hpp"
#include "ckw/series.hpp"

namespace ckw {

namespace {

constexpr int kCells = 4096;
// Below this value of 1 - 4v^2 the bump and all tabulated derivatives
// underflow to zero.
constexpr double kUnderflowGap = 1.0 / 700.0;

double Factorial(int j) {
  double f = 1.0;
  for (int i = 2; i <= j; ++i) f *= i;
  return f;
}

}  // namespace

const MollifiedStep& MollifiedStep::Instance() {
  static const MollifiedStep instance;
  return instance;
}

MollifiedStep::MollifiedStep() {
  h_ = 1.0 / kCells;
  const GaussLegendreRule& rule = GaussLegendre(12);
  cdf_.assign(kCells + 1, 0.0);
  double acc = 0.0;
  for (int i = 0; i < kCells; ++i) {
    const double lo = -0.5 + i * h_, hi = lo + h_;
    const double mid = 0.5 * (lo + hi), half = 0.5 * h_;
    double s = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) s += rule.weights[q] * RawBump(mid + half * rule.nodes[q]);
    acc += s * half;
    cdf_[static_cast<std::size_t>(i) + 1] = acc;
  }
  norm_ = 1.0 / acc;
  for (double& v : cdf_) v *= norm_;
  phi_.resize(cdf_.size());
  dphi_.resize(cdf_.size());
  for (std::size_t i = 0; i < cdf_.size(); ++i) {
    const double v = -0.5 + static_cast<double>(i) * h_;
    phi_[i] = Bump(v);
    const double gap = 1.0 - 4.0 * v * v;
    dphi_[i] = gap > kUnderflowGap ? phi_[i] * (-8.0 * v / (gap * gap)) : 0.0;
  }
}

double MollifiedStep::RawBump(double v) const {
  const double gap = 1.0 - 4.0 * v * v;
  if (gap <= kUnderflowGap) return 0.0;
  return std::exp(-1.0 / gap);
}

double MollifiedStep::Bump(double v, int j) const {
  if (j < 0) throw InputError("negative derivative order");
  const double gap = 1.0 - 4.0 * v * v;
  if (gap <= kUnderflowGap) return 0.0;
  if (j == 0) return norm_ * std::exp(-1.0 / gap);
  // Series of -1 / (1 - 4 (v + e)^2) in e, then exp.
  Series s(j);
  s[0] = gap;
  if (j >= 1) s[1] = -8.0 * v;
  if (j >= 2) s[2] = -4.0;
  const Series e = Exp(Reciprocal(s) * -1.0);
  return norm_ * e[j] * Factorial(j);
}

double MollifiedStep::BumpCdf(double u) const {
  if (u <= -0.5) return 0.0;
  if (u >= 0.5) return 1.0;
  // Odd symmetry about 0: Phi(u) = 1 - Phi(-u).
  if (u > 0.0) return 1.0 - BumpCdf(-u);
  const double pos = (u + 0.5) / h_;
  auto i = static_cast<std::size_t>(pos);
  if (i >= static_cast<std::size_t>(kCells)) i = kCells - 1;
  const double x0 = -0.5 + static_cast<double>(i) * h_;
  // Quintic Hermite on the cell from Phi, Phi' = phi, Phi'' = phi'.
  const double y0 = cdf_[i], y1 = cdf_[i + 1];
  const double d0 = phi_[i], d1 = phi_[i + 1];
  const double s0 = dphi_[i], s1 = dphi_[i + 1];
  const double t = (u - x0) / h_;
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
  const double h00 = 1 - 10 * t3 + 15 * t4 - 6 * t5;
  const double h10 = t - 6 * t3 + 8 * t4 - 3 * t5;
  const double h20 = 0.5 * t2 - 1.5 * t3 + 1.5 * t4 - 0.5 * t5;
  const double h01 = 10 * t3 - 15 * t4 + 6 * t5;
  const double h11 = -4 * t3 + 7 * t4 - 3 * t5;
  const double h21 = 0.5 * t3 - t4 + 0.5 * t5;
  return h00 * y0 + h10 * h_ * d0 + h20 * h_ * h_ * s0 + h01 * y1 + h11 * h_ * d1 + h21 * h_ * h_ * s1;
}

double MollifiedStep::operator()(double t) const {
  const double a = std::abs(t);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  return BumpCdf(t + 1.5) - BumpCdf(t - 1.5);
}

double MollifiedStep::Derivative(double t, int j) const {
  if (j == 0) return (*this)(t);
  if (j > kMaxDerivative) throw InputError("cutoff derivative order too high");
  const double a = std::abs(t);
  if (a <= 1.0 || a >= 2.0) return 0.0;
  return Bump(t + 1.5, j - 1) - Bump(t - 1.5, j - 1);
}

CutoffFamily::CutoffFamily(int n, double scale) : n_(n), scale_(scale) {
  if (n < 1) throw InputError("cutoff dimension must be >= 1");
  if (!(scale > 0.0)) throw InputError("cutoff scale must be positive");
}

double CutoffFamily::operator()(std::span<const double> x) const {
  const MollifiedStep& chi = MollifiedStep::Instance();
  double v = 1.0;
  for (int i = 0; i < n_; ++i) {
    v *= chi(x[static_cast<std::size_t>(i)] / scale_);
    if (v == 0.0) break;
  }
  return v;
}

double CutoffFamily::Derivative(std::span<const double> x, const MultiIndex& nu) const {
  const MollifiedStep& chi = MollifiedStep::Instance();
  double v = 1.0;
  for (int i = 0; i < n_; ++i) {
    v *= chi.Derivative(x[static_cast<std::size_t>(i)] / scale_, nu[i]);
    if (v == 0.0) return 0.0;
  }
  return v * std::pow(scale_, -nu.order());
}

double EmpiricalCutoffConstant(int k, int n, int samples) {
  const MollifiedStep& chi = MollifiedStep::Instance();
  std::vector<double> sup(static_cast<std::size_t>(k) + 2, 0.0);
  for (int s = 0; s < samples; ++s) {
    const double t = -2.0 + 4.0 * s / (samples - 1);
    for (int j = 0; j <= k + 1; ++j) sup[static_cast<std::size_t>(j)] = std::max(sup[static_cast<std::size_t>(j)], std::abs(chi.Derivative(t, j)));
  }
  double best = 0.0;
  for (const MultiIndex& alpha : MultiIndexSet(n, k + 1)) {
    double v = 1.0;
    for (int i = 0; i < n; ++i) v *= sup[static_cast<std::size_t>(alpha[i])];
    best = std::max(best, v);
  }
  return best;
}

}  // namespace ckw
