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

#include "ckw/whitney.hpp"

#include <cmath>
#include <sstream>

#include "ckw/error.hpp"

namespace ckw {

void NormContext::Check() const {
  if (k < 0) throw InputError("k must be >= 0");
  if (n < 1) throw InputError("n must be >= 1");
}

namespace {

struct RowBest {
  double value = -INFINITY;
  std::size_t j = 0;
  int z = 0;
  std::size_t alpha = 0;
};

RowBest BestInRow(const WhitneyField& field, const Modulus& omega, std::size_t i) {
  RowBest best;
  for (std::size_t j = i + 1; j < field.size(); ++j) {
    int z = 0;
    std::size_t a = 0;
    const double v = PairOscillation(field.jet(i), field.jet(j), omega, &z, &a);
    if (v > best.value) best = {v, j, z, a};
  }
  return best;
}

void CheckFinite(double v, const char* what) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "non-finite " << what << " value encountered";
    throw NumericalError(msg.str());
  }
}

}  // namespace

double PairOscillation(const Jet& a, const Jet& b, const Modulus& omega, int* z_out,
                       std::size_t* alpha_out) {
  const double d = Distance(a.base(), b.base());
  if (d == 0.0) throw InputError("coincident points in a Whitney field");
  const double w = omega(d);
  const int k = a.order();
  if (k == 0) {
    if (z_out) *z_out = 0;
    if (alpha_out) *alpha_out = 0;
    return std::abs(a[0] - b[0]) / w;
  }
  const MultiIndexSet& set = a.indices();
  double best = -INFINITY;
  for (int z = 0; z < 2; ++z) {
    const Point& at = z == 0 ? a.base() : b.base();
    for (std::size_t ai = 0; ai < set.size(); ++ai) {
      const MultiIndex& alpha = set[ai];
      const double diff = TaylorEval(a, alpha, at) - TaylorEval(b, alpha, at);
      const double v = std::abs(diff) / (std::pow(d, k - alpha.order()) * w);
      if (v > best) {
        best = v;
        if (z_out) *z_out = z;
        if (alpha_out) *alpha_out = ai;
      }
    }
  }
  return best;
}

LambdaReport WhitneyLambda(const WhitneyField& field, const NormContext& ctx, Execution exec) {
  ctx.Check();
  if (field.size() == 0) throw InputError("Whitney field has no points");
  if (field.dim() != ctx.n || field.order() != ctx.k) {
    throw InputError("field (n, k) does not match the norm context");
  }
  LambdaReport report;
  const MultiIndexSet& set = field.jet(0).indices();

  report.lambda_sup = -INFINITY;
  for (std::size_t i = 0; i < field.size(); ++i) {
    for (std::size_t a = 0; a < set.size(); ++a) {
      const double v = std::abs(field.jet(i)[a]);
      if (v > report.lambda_sup) {
        report.lambda_sup = v;
        report.sup_point = i;
        report.sup_alpha = set[a];
      }
    }
  }

  report.lambda_osc = 0.0;
  if (field.size() >= 2) {
    const Modulus& omega = ctx.omega;
    const ArgMaxResult row = kernels::ArgMax(exec, field.size() - 1, [&](std::size_t i) {
      return BestInRow(field, omega, i).value;
    });
    const RowBest best = BestInRow(field, omega, row.index);
    CheckFinite(best.value, "oscillation");
    report.lambda_osc = best.value;
    report.osc_i = row.index;
    report.osc_j = best.j;
    report.osc_z = best.z;
    report.osc_alpha = set[best.alpha];
    report.has_pair = true;
  }
  report.lambda = std::max(report.lambda_sup, report.lambda_osc);
  return report;
}

NormEstimate CkNormEstimate(const SmoothFunction& f, const NormContext& ctx,
                            std::span<const Point> sample, std::span<const PointPair> pairs,
                            Execution exec) {
  ctx.Check();
  if (sample.empty()) throw InputError("norm estimate needs a nonempty sample grid");
  if (f.dim != ctx.n) throw InputError("function dimension does not match the norm context");
  if (f.max_order < ctx.k) throw InputError("function does not provide derivatives up to order k");
  for (const Point& x : sample) {
    if (static_cast<int>(x.size()) != ctx.n) throw InputError("sample point has wrong dimension");
  }
  for (const PointPair& p : pairs) {
    if (static_cast<int>(p.first.size()) != ctx.n || static_cast<int>(p.second.size()) != ctx.n) {
      throw InputError("pair endpoint has wrong dimension");
    }
    if (Distance(p.first, p.second) == 0.0) throw InputError("pair endpoints must be distinct");
  }

  const auto indices = IndexSetFor(ctx.n, ctx.k);
  const MultiIndexSet& set = *indices;
  const auto [top_first, top_last] = set.OrderRange(ctx.k);

  auto derivative = [&](const Point& x, const MultiIndex& alpha) {
    const double v = f.derivative(x, alpha);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "derivative " << alpha.ToString() << " is not finite at a sample point";
      throw NumericalError(msg.str());
    }
    return v;
  };
  auto sup_at = [&](std::size_t p, std::size_t* which) {
    double best = -INFINITY;
    for (std::size_t a = 0; a < set.size(); ++a) {
      const double v = std::abs(derivative(sample[p], set[a]));
      if (v > best) {
        best = v;
        if (which) *which = a;
      }
    }
    return best;
  };
  auto osc_at = [&](std::size_t p, std::size_t* which) {
    const double w = ctx.omega(Distance(pairs[p].first, pairs[p].second));
    double best = -INFINITY;
    for (std::size_t a = top_first; a < top_last; ++a) {
      const double v = std::abs(derivative(pairs[p].first, set[a]) -
                                derivative(pairs[p].second, set[a])) / w;
      if (v > best) {
        best = v;
        if (which) *which = a;
      }
    }
    return best;
  };

  NormEstimate est;
  est.grid_size = sample.size();
  est.pair_count = pairs.size();

  const ArgMaxResult s = kernels::ArgMax(exec, sample.size(), [&](std::size_t p) { return sup_at(p, nullptr); });
  std::size_t which = 0;
  est.sup_part = sup_at(s.index, &which);
  est.sup_point = s.index;
  est.sup_alpha = set[which];

  if (!pairs.empty()) {
    const ArgMaxResult o = kernels::ArgMax(exec, pairs.size(), [&](std::size_t p) { return osc_at(p, nullptr); });
    est.seminorm_part = osc_at(o.index, &which);
    est.seminorm_pair = o.index;
    est.seminorm_alpha = set[which];
  } else {
    est.seminorm_alpha = set[top_first];
  }
  est.norm = std::max(est.sup_part, est.seminorm_part);
  return est;
}

std::vector<PointPair> AllPairs(std::span<const Point> sample) {
  std::vector<PointPair> pairs;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      if (Distance(sample[i], sample[j]) > 0.0) pairs.emplace_back(sample[i], sample[j]);
    }
  }
  return pairs;
}

}  // namespace ckw
