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

#include "ckw/extension.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>

#include "ckw/cutoff.hpp"
#include "ckw/error.hpp"

namespace ckw {

namespace {

double Falling(int p, int m) {
  // p (p-1) ... (p-m+1)
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= p - i;
  return r;
}

double Choose(int n, int r) {
  double v = 1.0;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

// m-th derivative at s of the polynomial with monomial coefficients c.
double PolyDerivative(const std::vector<double>& c, int m, double s) {
  double v = 0.0;
  for (int p = static_cast<int>(c.size()) - 1; p >= m; --p) {
    v = v * s + c[static_cast<std::size_t>(p)] * Falling(p, m);
  }
  return v;
}

}  // namespace

McShaneExtension::McShaneExtension(WhitneyField data, Modulus omega, McShaneMode mode,
                                   Execution exec)
    : data_(std::move(data)), omega_(std::move(omega)), mode_(mode) {
  if (data_.size() == 0) throw InputError("McShane extension needs at least one point");
  if (data_.order() != 0) throw InputError("McShane extension needs k = 0 data");
  NormContext ctx{0, data_.dim(), omega_};
  const LambdaReport rep = WhitneyLambda(data_, ctx, exec);
  lambda_ = rep.lambda_osc;
  sup_bound_ = rep.lambda_sup;
}

double McShaneExtension::Envelope(std::span<const double> x, bool lower) const {
  double best = lower ? INFINITY : -INFINITY;
  for (const Jet& j : data_.jets()) {
    const double d = Distance(x, j.base());
    const double slack = d > 0.0 ? lambda_ * omega_(d) : 0.0;
    if (lower) {
      best = std::min(best, j[0] + slack);
    } else {
      best = std::max(best, j[0] - slack);
    }
  }
  return best;
}

double McShaneExtension::operator()(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != data_.dim()) throw InputError("query point has wrong dimension");
  for (const Jet& j : data_.jets()) {
    if (std::equal(x.begin(), x.end(), j.base().begin())) return j[0];
  }
  double v = 0.0;
  switch (mode_) {
    case McShaneMode::kMin:
      v = Envelope(x, true);
      break;
    case McShaneMode::kMax:
      v = Envelope(x, false);
      break;
    case McShaneMode::kAverage:
      v = 0.5 * (Envelope(x, true) + Envelope(x, false));
      break;
  }
  return std::clamp(v, -sup_bound_, sup_bound_);
}

std::vector<double> McShaneExtension::EvaluateBatch(std::span<const Point> points,
                                                    Execution exec) const {
  std::vector<double> out;
  kernels::Map(exec, points.size(), [&](std::size_t i) { return (*this)(points[i]); }, out);
  return out;
}

HermiteExtension1D::HermiteExtension1D(WhitneyField field, double tail_scale)
    : k_(field.order()), tail_scale_(tail_scale) {
  if (field.size() == 0) throw InputError("Hermite extension needs at least one point");
  if (field.dim() != 1) throw InputError("Hermite extension is one-dimensional");
  if (!(tail_scale > 0.0) || !std::isfinite(tail_scale)) {
    throw InputError("tail scale must be positive and finite");
  }
  std::vector<std::size_t> order(field.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return field.point(a)[0] < field.point(b)[0]; });
  for (std::size_t i : order) {
    xs_.push_back(field.point(i)[0]);
    const auto c = field.jet(i).coefficients();
    jets_.emplace_back(c.begin(), c.end());
  }

  // Conditions: derivatives 0..k at s = 0 and s = 1 on monomials s^p.
  const int d = 2 * k_ + 2;
  Eigen::MatrixXd A(d, d);
  for (int side = 0; side < 2; ++side) {
    for (int j = 0; j <= k_; ++j) {
      const int row = side * (k_ + 1) + j;
      for (int p = 0; p < d; ++p) {
        A(row, p) = (side == 0) ? (p == j ? Falling(p, j) : 0.0) : (p >= j ? Falling(p, j) : 0.0);
      }
    }
  }
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  for (int side = 0; side < 2; ++side) {
    for (int j = 0; j <= k_; ++j) {
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d);
      rhs(side * (k_ + 1) + j) = 1.0;
      const Eigen::VectorXd c = lu.solve(rhs);
      basis_[side].emplace_back(c.data(), c.data() + d);
    }
  }
}

HermiteExtension1D::Where HermiteExtension1D::Locate(double x, std::size_t* i) const {
  const auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  if (it != xs_.end() && *it == x) {
    *i = static_cast<std::size_t>(it - xs_.begin());
    return Where::kKnot;
  }
  if (it == xs_.begin()) {
    *i = 0;
    return Where::kLeftTail;
  }
  if (it == xs_.end()) {
    *i = xs_.size() - 1;
    return Where::kRightTail;
  }
  *i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  return Where::kGap;
}

std::vector<HermiteExtension1D::Weight> HermiteExtension1D::Weights(double x, int m) const {
  if (m < 0 || m > k_) throw InputError("derivative order must lie in [0, k]");
  if (!std::isfinite(x)) throw InputError("query point must be finite");
  std::size_t i = 0;
  std::vector<Weight> w;
  switch (Locate(x, &i)) {
    case Where::kKnot:
      w.push_back({i, m, 1.0});
      break;
    case Where::kGap: {
      const double h = xs_[i + 1] - xs_[i];
      const double s = (x - xs_[i]) / h;
      for (int side = 0; side < 2; ++side) {
        for (int j = 0; j <= k_; ++j) {
          const double v = PolyDerivative(basis_[side][static_cast<std::size_t>(j)], m, s) *
                           std::pow(h, j - m);
          w.push_back({i + static_cast<std::size_t>(side), j, v});
        }
      }
      break;
    }
    case Where::kLeftTail:
    case Where::kRightTail: {
      // F = T(x) chi(|x - a| / scale); Leibniz in x.
      const MollifiedStep& chi = MollifiedStep::Instance();
      const double a = xs_[i];
      const double u = x - a;
      const double sign = u < 0.0 ? -1.0 : 1.0;
      const double dist = std::abs(u) / tail_scale_;
      for (int j = 0; j <= k_; ++j) {
        // d^{m-r} of T's monomial (u^j / j!) times d^r of the cutoff.
        double v = 0.0;
        for (int r = 0; r <= m; ++r) {
          const int q = m - r;
          if (q > j) continue;
          double mono = 1.0;
          for (int p = 0; p < j - q; ++p) mono *= u / (p + 1);
          const double dchi = chi.Derivative(dist, r) * std::pow(sign / tail_scale_, r);
          v += Choose(m, r) * mono * dchi;
        }
        w.push_back({i, j, v});
      }
      break;
    }
  }
  return w;
}

double HermiteExtension1D::Derivative(double x, int m) const {
  double v = 0.0;
  for (const Weight& w : Weights(x, m)) {
    v += w.weight * jets_[w.knot][static_cast<std::size_t>(w.component)];
  }
  return v;
}

std::vector<double> HermiteExtension1D::Evaluate(double x) const {
  std::vector<double> out;
  for (int m = 0; m <= k_; ++m) out.push_back(Derivative(x, m));
  return out;
}

SmoothFunction HermiteExtension1D::AsFunction() const {
  auto self = std::make_shared<HermiteExtension1D>(*this);
  return SmoothFunction{1, k_, [self](std::span<const double> x, const MultiIndex& a) {
                          return self->Derivative(x[0], a[0]);
                        }};
}

DepthRecord DepthAudit(const HermiteExtension1D& op, double x) {
  DepthRecord rec;
  std::map<std::size_t, std::vector<double>> by_knot;
  for (const auto& w : op.Weights(x, 0)) {
    auto& v = by_knot[w.knot];
    v.resize(static_cast<std::size_t>(op.order()) + 1, 0.0);
    v[static_cast<std::size_t>(w.component)] += w.weight;
  }
  double value_sum = 0.0;
  for (auto& [knot, weights] : by_knot) {
    const bool active = std::any_of(weights.begin(), weights.end(), [](double v) { return v != 0.0; });
    if (!active) continue;
    value_sum += weights[0];
    rec.active.push_back({knot, op.knot(knot), std::move(weights)});
  }
  rec.depth = rec.active.size();
  // Outside the hull the cutoff makes constants decay; only inside is
  // reproduction required.
  rec.constant_defect = std::abs(value_sum - 1.0);
  const bool inside = x >= op.knot(0) && x <= op.knot(op.size() - 1);
  rec.reproduces_constants = !inside || rec.constant_defect <= 1e-12;
  return rec;
}

DepthRecord DepthAudit(const McShaneExtension&, std::span<const double>) {
  DepthRecord rec;
  rec.linear = false;
  rec.reproduces_constants = false;
  return rec;
}

}  // namespace ckw
