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

#include "ckw/jackson.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "ckw/error.hpp"

namespace ckw {

namespace {

constexpr double kPi = Periodization::kPi;
constexpr double kDyadic = 4294967296.0;  // 2^32

double MaxAbs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void ThrowQuadrature(const char* what, const QuadratureResult& r, double a, double b) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << ": adaptive quadrature did not converge on [" << a << ", " << b
      << "] (estimate " << r.value << ", error " << r.error_estimate << ", "
      << r.evaluations << " evaluations, " << r.panels << " panels)";
  throw NumericalError(msg.str());
}

// Integrates f over [a, b] split at the sorted interior cuts.
double IntegrateSplit(const std::function<double(double)>& f, std::vector<double> cuts, double a,
                      double b, const AdaptiveOptions& options, const char* what) {
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = std::max(cuts[i], a), hi = std::min(cuts[i + 1], b);
    if (!(hi > lo)) continue;
    const QuadratureResult r = IntegrateAdaptive(f, lo, hi, options);
    if (!r.converged) ThrowQuadrature(what, r, lo, hi);
    total += r.value;
  }
  return total;
}

}  // namespace

JacksonKernel::JacksonKernel(int N) : N_(N), M_(N / 2) {
  if (N < 2) throw InputError("Jackson kernel needs N >= 2");
  AdaptiveOptions opts;
  opts.abs_tol = 1e-14 * std::pow(static_cast<double>(M_), 3);
  opts.rel_tol = 1e-14;
  const QuadratureResult r =
      IntegrateAdaptive([this](double t) { return RawPower(t); }, 0.0, kPi, opts);
  if (!r.converged) ThrowQuadrature("Jackson kernel mass", r, 0.0, kPi);
  raw_mass_ = 2.0 * r.value;
  gamma_ = 1.0 / raw_mass_;
}

double JacksonKernel::Ratio(double t) const {
  const double s = std::sin(0.5 * t);
  if (std::abs(s) > 1e-4) return std::sin(0.5 * M_ * t) / s;
  const double c = std::cos(0.5 * t);
  double prev = 1.0, cur = 2.0 * c;
  if (M_ == 1) return 1.0;
  for (int j = 2; j < M_; ++j) {
    const double next = 2.0 * c * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double JacksonKernel::RawPower(double t) const {
  const double r = Ratio(t);
  const double r2 = r * r;
  return r2 * r2;
}

const JacksonKernel& KernelFor(int N) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<JacksonKernel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[N];
  if (!slot) slot = std::make_unique<JacksonKernel>(N);
  return *slot;
}

double JacksonSmooth1D(const std::function<double(double)>& f, int N, double x,
                       std::span<const double> kinks, const AdaptiveOptions& options) {
  const JacksonKernel& kernel = KernelFor(N);
  std::vector<double> cuts{0.0};
  for (double kink : kinks) {
    // x - t = kink + 2 pi m
    double t = x - kink;
    t -= 2.0 * kPi * std::nearbyint(t / (2.0 * kPi));
    if (t > -kPi && t < kPi) cuts.push_back(t);
  }
  return IntegrateSplit([&](double t) { return f(x - t) * kernel(t); }, std::move(cuts), -kPi,
                        kPi, options, "Jackson smoothing");
}

Periodization::Periodization(SmoothFunction f, int ell)
    : f_(std::move(f)),
      ell_(ell),
      period_(std::ceil(8.0 * ell * std::sqrt(static_cast<double>(f_.dim)) * kDyadic) / kDyadic),
      cutoff_(f_.dim < 1 ? 1 : f_.dim, ell < 1 ? 1.0 : static_cast<double>(ell)) {
  if (f_.dim < 1) throw InputError("periodization needs dimension >= 1");
  if (ell < 1) throw InputError("periodization needs l >= 1");
  if (!f_.derivative) throw InputError("periodization needs a callable source");
}

Point Periodization::Reduce(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim()) throw InputError("point has wrong dimension");
  Point r(x.begin(), x.end());
  for (double& v : r) v -= period_ * std::nearbyint(v / period_);
  return r;
}

double Periodization::operator()(std::span<const double> x) const {
  return Derivative(x, MultiIndex::Zero(dim()));
}

double Periodization::Derivative(std::span<const double> x, const MultiIndex& alpha) const {
  if (alpha.dim() != dim()) throw InputError("multi-index has wrong dimension");
  if (alpha.order() > f_.max_order) {
    throw InputError("missing derivatives: order " + std::to_string(alpha.order()) +
                     " requested, source provides " + std::to_string(f_.max_order));
  }
  const Point r = Reduce(x);
  const double l = static_cast<double>(ell_);
  bool inner = true;
  for (double v : r) {
    if (std::abs(v) >= 2.0 * l) return 0.0;
    if (std::abs(v) > l) inner = false;
  }
  if (inner) return f_.derivative(r, alpha);
  double total = 0.0;
  for (const MultiIndex& nu : MultiIndexSet(dim(), alpha.order())) {
    if (!alpha.Dominates(nu)) continue;
    const double drho = cutoff_.Derivative(r, nu);
    if (drho == 0.0) continue;
    total += alpha.Binomial(nu) * drho * f_.derivative(r, alpha - nu);
  }
  return total;
}

SmoothFunction Periodization::AsFunction() const {
  auto self = std::make_shared<Periodization>(*this);
  return SmoothFunction{dim(), max_order(),
                        [self](std::span<const double> x, const MultiIndex& a) {
                          return self->Derivative(x, a);
                        }};
}

SmoothingOptions SmoothingOptions::DefaultFor(int n) {
  SmoothingOptions o;
  if (n <= 1) {
    o.quadrature.abs_tol = 1e-13;
    o.quadrature.rel_tol = 1e-12;
    o.quadrature.initial_panels = 2;
  } else if (n == 2) {
    o.quadrature.abs_tol = 1e-10;
    o.quadrature.rel_tol = 1e-9;
    o.quadrature.initial_panels = 1;
    o.quadrature.nodes = 12;
  } else {
    o.quadrature.abs_tol = 1e-8;
    o.quadrature.rel_tol = 1e-7;
    o.quadrature.initial_panels = 1;
    o.quadrature.nodes = 8;
  }
  return o;
}

SmoothingOperator::SmoothingOperator(Periodization source, int N,
                                     std::optional<SmoothingOptions> options)
    : source_(std::move(source)),
      N_(N),
      kernel_(&KernelFor(N)),
      options_(options ? *options : SmoothingOptions::DefaultFor(source_.dim())) {
  if (source_.dim() > 3) {
    throw InputError("tensor smoothing is limited to n <= 3");
  }
}

double SmoothingOperator::Evaluate(std::span<const double> x, const MultiIndex& alpha) const {
  if (static_cast<int>(x.size()) != source_.dim()) throw InputError("point has wrong dimension");
  if (alpha.dim() != source_.dim()) throw InputError("multi-index has wrong dimension");
  if (alpha.order() > source_.max_order()) {
    throw InputError("missing derivatives: order " + std::to_string(alpha.order()) +
                     " requested, source provides " + std::to_string(source_.max_order()));
  }
  Point arg(x.begin(), x.end());
  return Integrate(0, x, arg, alpha);
}

double SmoothingOperator::Integrate(int axis, std::span<const double> x, Point& arg,
                                    const MultiIndex& alpha) const {
  const auto a = static_cast<std::size_t>(axis);
  const double lambda = source_.scale();
  const double period = source_.period();
  const double l = static_cast<double>(source_.ell());
  const double xa = x[a];

  // Cuts where the argument x_a - lambda t crosses a cutoff transition.
  std::vector<double> cuts{0.0};
  for (double c : {-2.0 * l, -l, l, 2.0 * l}) {
    const double m_lo = std::floor((xa - c - lambda * kPi) / period);
    const double m_hi = std::ceil((xa - c + lambda * kPi) / period);
    for (double m = m_lo; m <= m_hi; m += 1.0) {
      const double t = (xa - c - m * period) / lambda;
      if (t > -kPi && t < kPi) cuts.push_back(t);
    }
  }
  cuts.push_back(-kPi);
  cuts.push_back(kPi);
  std::sort(cuts.begin(), cuts.end());

  auto integrand = [&](double t) {
    arg[a] = xa - lambda * t;
    const double inner = axis + 1 == source_.dim() ? source_.Derivative(arg, alpha)
                                                   : Integrate(axis + 1, x, arg, alpha);
    return inner * (*kernel_)(t);
  };

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    // Segments whose argument lies outside the cutoff support contribute 0.
    double mid = xa - lambda * 0.5 * (lo + hi);
    mid -= period * std::nearbyint(mid / period);
    if (std::abs(mid) >= 2.0 * l) continue;
    const QuadratureResult r = IntegrateAdaptive(integrand, lo, hi, options_.quadrature);
    if (!r.converged) ThrowQuadrature("tensor smoothing", r, lo, hi);
    total += r.value;
  }
  return total;
}

std::vector<double> SmoothingOperator::EvaluateBatch(std::span<const Point> points,
                                                     const MultiIndex& alpha,
                                                     Execution exec) const {
  std::vector<double> out;
  kernels::Map(exec, points.size(), [&](std::size_t i) { return Evaluate(points[i], alpha); },
               out);
  return out;
}

double ApplyFiniteRank(const SmoothFunction& f, int N, int ell, std::span<const double> x,
                       const MultiIndex& alpha) {
  return SmoothingOperator(Periodization(f, ell), N).Evaluate(x, alpha);
}

double FiniteRankLNN(const SmoothFunction& f, int N, std::span<const double> x,
                     const MultiIndex& alpha) {
  return ApplyFiniteRank(f, N, N, x, alpha);
}

namespace {

// A SmoothFunction backed by a table of derivative values at fixed points.
SmoothFunction TableFunction(int n, int k, std::span<const Point> grid,
                             std::vector<std::vector<double>> values /* [alpha][point] */) {
  auto index = std::make_shared<std::map<Point, std::size_t>>();
  for (std::size_t i = 0; i < grid.size(); ++i) index->emplace(grid[i], i);
  auto table = std::make_shared<std::vector<std::vector<double>>>(std::move(values));
  auto set = IndexSetFor(n, k);
  return SmoothFunction{n, k, [index, table, set](std::span<const double> x, const MultiIndex& a) {
                          const auto it = index->find(Point(x.begin(), x.end()));
                          if (it == index->end()) throw InputError("point is not in the table");
                          return (*table)[set->IndexOf(a)][it->second];
                        }};
}

double SafeRatio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

ApproxReport ErrorReport(const SmoothFunction& f, int ell, int N, const NormContext& ctx,
                         std::span<const Point> grid, Execution exec, double omega_limit_probe) {
  ctx.Check();
  if (grid.size() < 2) throw InputError("error report needs at least 2 grid points");
  if (f.dim != ctx.n) throw InputError("function dimension does not match the norm context");
  if (f.max_order < ctx.k) throw InputError("missing derivatives: source order below k");

  const Periodization per(f, ell);
  const double half = 0.5 * per.period();
  for (const Point& p : grid) {
    if (static_cast<int>(p.size()) != ctx.n) throw InputError("grid point has wrong dimension");
    for (double v : p) {
      if (!(std::abs(v) <= half)) throw InputError("grid point lies outside the fundamental cell");
    }
  }
  {
    std::vector<Point> sorted(grid.begin(), grid.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("degenerate grid: repeated points");
    }
  }

  ApproxReport rep;
  rep.N = N;
  rep.ell = ell;
  rep.k = ctx.k;
  rep.n = ctx.n;
  rep.grid_size = grid.size();
  rep.period = per.period();
  rep.scale = per.scale();

  const std::vector<Point> pairs_storage_points(grid.begin(), grid.end());
  const std::vector<PointPair> pairs = AllPairs(pairs_storage_points);
  rep.pair_count = pairs.size();

  const SmoothingOperator smooth(per, N);
  const auto set = IndexSetFor(ctx.n, ctx.k);
  std::vector<std::vector<double>> smoothed(set->size()), error(set->size());
  for (std::size_t a = 0; a < set->size(); ++a) {
    smoothed[a] = smooth.EvaluateBatch(grid, (*set)[a], exec);
    error[a].resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      error[a][i] = per.Derivative(grid[i], (*set)[a]) - smoothed[a][i];
    }
    rep.derivative_errors.push_back({(*set)[a], MaxAbs(error[a])});
  }

  rep.norm_f = CkNormEstimate(f, ctx, grid, pairs, exec);
  rep.norm_f_ell = CkNormEstimate(per.AsFunction(), ctx, grid, pairs, exec);
  rep.norm_smoothed =
      CkNormEstimate(TableFunction(ctx.n, ctx.k, grid, smoothed), ctx, grid, pairs, exec);
  rep.norm_error = CkNormEstimate(TableFunction(ctx.n, ctx.k, grid, error), ctx, grid, pairs, exec);

  const double base = rep.norm_f.norm;
  rep.empirical_C_ell = SafeRatio(rep.norm_f_ell.norm, base);
  rep.empirical_smoothed_ratio = SafeRatio(rep.norm_smoothed.norm, base);
  rep.empirical_c_N = SafeRatio(rep.norm_error.norm, base);
  rep.rate_shape = std::max(1.0 / N, ctx.omega(1.0 / N));
  rep.empirical_fitted_c = SafeRatio(rep.empirical_c_N, ctx.n * rep.empirical_C_ell * rep.rate_shape);

  rep.empirical_cutoff_constant = EmpiricalCutoffConstant(ctx.k, ctx.n);
  rep.omega_limit_probe = omega_limit_probe;
  rep.limit_reciprocal_omega = LimitAtInfinityReciprocal(ctx.omega, omega_limit_probe);
  rep.rescale_numerator = 1.0 + rep.empirical_cutoff_constant * 4.0 * std::sqrt(ctx.n) *
                                    (ctx.k + 1) * rep.limit_reciprocal_omega;
  rep.rescale_factor = SafeRatio(rep.rescale_numerator, rep.empirical_C_ell);
  return rep;
}

const char* VerdictName(WeakStarVerdict v) {
  switch (v) {
    case WeakStarVerdict::kConverges:
      return "CONVERGES";
    case WeakStarVerdict::kUnboundedNorms:
      return "FAILS_BOUNDED_NORMS";
    case WeakStarVerdict::kNoPointwiseLimit:
      return "FAILS_POINTWISE_LIMIT";
  }
  return "UNKNOWN";
}

WeakStarReport WeakStarCheck(std::span<const SmoothFunction> sequence, const NormContext& ctx,
                             std::span<const Point> probes, std::span<const Point> norm_grid,
                             const WeakStarOptions& options, const SmoothFunction* limit,
                             Execution exec) {
  ctx.Check();
  if (sequence.empty()) throw InputError("weak* check needs a nonempty sequence");
  if (!(options.tail_fraction > 0.0 && options.tail_fraction <= 1.0)) {
    throw InputError("tail fraction must lie in (0, 1]");
  }
  WeakStarReport rep;
  const std::vector<Point> grid(norm_grid.begin(), norm_grid.end());
  const std::vector<PointPair> pairs = AllPairs(grid);
  for (const SmoothFunction& f : sequence) {
    rep.norms.push_back(CkNormEstimate(f, ctx, grid, pairs, exec).norm);
  }
  for (std::size_t i = 0; i < rep.norms.size(); ++i) {
    if (rep.norms[i] > rep.max_norm) {
      rep.max_norm = rep.norms[i];
      rep.max_norm_index = i;
    }
  }

  const std::size_t m = sequence.size();
  const auto tail = std::min<std::size_t>(
      m, std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(options.tail_fraction * m))));
  const auto set = IndexSetFor(ctx.n, ctx.k);
  for (std::size_t p = 0; p < probes.size(); ++p) {
    for (const MultiIndex& alpha : *set) {
      double lo = INFINITY, hi = -INFINITY, dev = 0.0;
      const double target = limit ? limit->derivative(probes[p], alpha) : 0.0;
      for (std::size_t i = m - tail; i < m; ++i) {
        const double v = sequence[i].derivative(probes[p], alpha);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        if (limit) dev = std::max(dev, std::abs(v - target));
      }
      if (!limit) dev = hi - lo;
      if (dev > rep.max_tail_deviation) {
        rep.max_tail_deviation = dev;
        rep.worst_probe = p;
        rep.worst_alpha = alpha;
      }
    }
  }

  std::ostringstream detail;
  if (rep.max_norm > options.norm_cap) {
    rep.verdict = WeakStarVerdict::kUnboundedNorms;
    detail << "condition (a) fails: sampled norm " << rep.max_norm << " of term "
           << rep.max_norm_index << " exceeds cap " << options.norm_cap;
  } else if (rep.max_tail_deviation > options.tolerance) {
    rep.verdict = WeakStarVerdict::kNoPointwiseLimit;
    detail << "condition (b) fails: tail deviation " << rep.max_tail_deviation << " at probe "
           << rep.worst_probe << ", alpha " << rep.worst_alpha.ToString() << " exceeds tolerance "
           << options.tolerance;
  } else {
    detail << "norms bounded by " << rep.max_norm << "; tail deviation "
           << rep.max_tail_deviation;
  }
  rep.detail = detail.str();
  return rep;
}

}  // namespace ckw
