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

#include "ckw/jet.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "ckw/error.hpp"

namespace ckw {

namespace {

std::string FormatPoint(std::span<const double> x) {
  std::ostringstream out;
  out.precision(17);
  out << '(';
  for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << x[i];
  out << ')';
  return out.str();
}

}  // namespace

double Distance(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

std::shared_ptr<const MultiIndexSet> IndexSetFor(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MultiIndexSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::make_shared<const MultiIndexSet>(n, k);
  return slot;
}

Jet::Jet(Point base, int k, std::vector<double> coefficients)
    : base_(std::move(base)), k_(k), c_(std::move(coefficients)) {
  if (base_.empty()) throw InputError("jet base point needs dimension >= 1");
  if (k < 0) throw InputError("jet order must be >= 0");
  indices_ = IndexSetFor(dim(), k);
  if (c_.size() != indices_->size()) {
    std::ostringstream msg;
    msg << "jet at " << FormatPoint(base_) << " has " << c_.size()
        << " coefficients, expected " << indices_->size();
    throw InputError(msg.str());
  }
  for (double x : base_) {
    if (!std::isfinite(x)) throw InputError("jet base point has a non-finite coordinate");
  }
  for (double v : c_) {
    if (!std::isfinite(v)) throw InputError("jet at " + FormatPoint(base_) + " has a non-finite coefficient");
  }
}

Jet Jet::Zero(Point base, int k) {
  const std::size_t size = NumMultiIndices(static_cast<int>(base.size()), k);
  return Jet(std::move(base), k, std::vector<double>(size, 0.0));
}

double TaylorEval(const Jet& jet, const MultiIndex& alpha, std::span<const double> z) {
  if (alpha.dim() != jet.dim()) throw InputError("multi-index dimension does not match the jet");
  if (alpha.order() > jet.order()) {
    throw InputError("derivative order " + std::to_string(alpha.order()) +
                     " exceeds jet order " + std::to_string(jet.order()));
  }
  if (z.size() != jet.base().size()) throw InputError("evaluation point dimension does not match the jet");
  Point h(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) h[i] = z[i] - jet.base()[i];
  const MultiIndexSet& set = jet.indices();
  double sum = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const MultiIndex& beta = set[i];
    if (!beta.Dominates(alpha)) continue;
    const MultiIndex gamma = beta - alpha;
    sum += jet[i] / gamma.Factorial() * gamma.Power(h);
  }
  return sum;
}

WhitneyField::WhitneyField(int n, int k, std::vector<Jet> jets)
    : n_(n), k_(k), jets_(std::move(jets)) {
  if (n < 1) throw InputError("field dimension must be >= 1");
  if (k < 0) throw InputError("field order must be >= 0");
  for (const Jet& j : jets_) {
    if (j.dim() != n || j.order() != k) {
      throw InputError("jet at " + FormatPoint(j.base()) + " does not match field (n, k)");
    }
  }
  for (std::size_t i = 0; i < jets_.size(); ++i) {
    for (std::size_t j = i + 1; j < jets_.size(); ++j) {
      if (Distance(point(i), point(j)) == 0.0) {
        std::ostringstream msg;
        msg << "duplicate point " << FormatPoint(point(i)) << " at indices " << i << " and " << j;
        throw InputError(msg.str());
      }
    }
  }
}

WhitneyField WhitneyField::FromValues(std::vector<Point> points, std::span<const double> values) {
  if (points.size() != values.size()) throw InputError("point and value counts differ");
  if (points.empty()) throw InputError("field needs at least one point");
  const int n = static_cast<int>(points.front().size());
  std::vector<Jet> jets;
  jets.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != n) throw InputError("points have inconsistent dimension");
    jets.emplace_back(std::move(points[i]), 0, std::vector<double>{values[i]});
  }
  return WhitneyField(n, 0, std::move(jets));
}

double WhitneyField::MinPairwiseDistance() const {
  double best = INFINITY;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) best = std::min(best, Distance(point(i), point(j)));
  }
  return best;
}

WhitneyField WhitneyField::Restrict(std::span<const std::size_t> indices) const {
  std::vector<Jet> sub;
  sub.reserve(indices.size());
  for (std::size_t i : indices) sub.push_back(jets_.at(i));
  return WhitneyField(n_, k_, std::move(sub));
}

WhitneyField WhitneyField::Combine(double a, const WhitneyField& other, double b) const {
  if (other.n_ != n_ || other.k_ != k_ || other.size() != size()) {
    throw InputError("combined fields must share n, k and points");
  }
  std::vector<Jet> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (point(i) != other.point(i)) throw InputError("combined fields must share points");
    std::vector<double> c(jets_[i].coefficients().begin(), jets_[i].coefficients().end());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a * c[j] + b * other.jets_[i][j];
    out.emplace_back(point(i), k_, std::move(c));
  }
  return WhitneyField(n_, k_, std::move(out));
}

WhitneyField WhitneyField::Scaled(double s) const { return Combine(s, *this, 0.0); }

}  // namespace ckw
