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

#include "ckw/markov.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ckw/error.hpp"
#include "ckw/lp.hpp"

namespace ckw {

namespace {

// phi_alpha(z) = ((z - x) / r)^alpha for |alpha| <= k.
std::vector<double> Basis(const MultiIndexSet& set, std::span<const double> center, double r,
                          std::span<const double> z) {
  std::vector<double> u(center.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = (z[i] - center[i]) / r;
  std::vector<double> phi(set.size());
  for (std::size_t a = 0; a < set.size(); ++a) phi[a] = set[a].Power(u);
  return phi;
}

struct Sweep {
  bool capped = false;
  double value = 0.0;
  std::size_t argmax = 0;
  std::size_t lp_count = 0;
};

Sweep SolveOnGrid(const MarkovProbe& probe, const std::vector<Point>& grid, Execution exec) {
  const int n = static_cast<int>(probe.center.size());
  const auto set = IndexSetFor(n, probe.k);
  const std::size_t q = set->size();
  const std::size_t s = probe.sample.size();

  std::vector<std::vector<double>> sample_phi;
  for (const Point& p : probe.sample) sample_phi.push_back(Basis(*set, probe.center, probe.radius, p));
  const std::set<Point> in_sample(probe.sample.begin(), probe.sample.end());

  std::vector<char> solved(grid.size(), 0);
  const ArgMaxResult best = kernels::ArgMax(exec, grid.size(), [&](std::size_t g) -> double {
    // At a sample point the optimum is 1: |p(g)| <= 1 and p = 1 attains it.
    if (in_sample.count(grid[g])) return 1.0;
    solved[g] = 1;
    const std::vector<double> target = Basis(*set, probe.center, probe.radius, grid[g]);
    lp::LinearProgram prog(static_cast<int>(2 * s), lp::Sense::kMinimize);
    for (int v = 0; v < static_cast<int>(2 * s); ++v) prog.SetObjective(v, 1.0);
    std::vector<double> row(2 * s);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t i = 0; i < s; ++i) {
        row[2 * i] = sample_phi[i][a];
        row[2 * i + 1] = -sample_phi[i][a];
      }
      prog.AddRow(row, lp::RowType::kEqual, target[a]);
    }
    const lp::Solution sol = lp::Solve(prog);
    if (sol.status == lp::Status::kInfeasible) return INFINITY;
    if (sol.status != lp::Status::kOptimal) {
      std::ostringstream msg;
      msg << "Markov LP at grid point " << g << " returned " << lp::StatusName(sol.status);
      for (const auto& line : sol.log) msg << "; " << line;
      throw NumericalError(msg.str());
    }
    return sol.optimum;
  });
  Sweep sw;
  sw.argmax = best.index;
  sw.value = best.value;
  sw.capped = !(best.value <= probe.cap);
  for (char c : solved) sw.lp_count += static_cast<std::size_t>(c);
  return sw;
}

}  // namespace

std::vector<Point> CubeGrid(std::span<const double> center, double radius, int resolution) {
  const int n = static_cast<int>(center.size());
  if (n < 1 || n > 3) throw InputError("cube grids support 1 <= n <= 3");
  if (resolution < 1) throw InputError("grid resolution must be >= 1");
  std::vector<double> axis(static_cast<std::size_t>(resolution));
  for (int j = 0; j < resolution; ++j) {
    axis[static_cast<std::size_t>(j)] = resolution == 1 ? 0.0 : -1.0 + 2.0 * j / (resolution - 1);
  }
  std::vector<Point> grid;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    Point p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      p[static_cast<std::size_t>(i)] =
          center[static_cast<std::size_t>(i)] + radius * axis[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    grid.push_back(std::move(p));
    int i = n - 1;
    while (i >= 0 && ++idx[static_cast<std::size_t>(i)] == resolution) idx[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return grid;
}

MarkovRatio ComputeMarkovRatio(const MarkovProbe& probe, Execution exec) {
  const int n = static_cast<int>(probe.center.size());
  if (n < 1 || n > 3) throw InputError("Markov probes support 1 <= n <= 3");
  if (!(probe.radius > 0.0) || !std::isfinite(probe.radius)) {
    throw InputError("probe radius must be positive and finite");
  }
  if (probe.k < 0) throw InputError("degree k must be >= 0");
  if (probe.sample.empty()) throw InputError("Markov probe needs a nonempty set sample");
  if (probe.resolution < 2) throw InputError("Markov grid resolution must be >= 2");
  if (!(probe.cap > 1.0)) throw InputError("ratio cap must exceed 1");
  const double slack = 1e-12 * probe.radius;
  for (const Point& p : probe.sample) {
    if (static_cast<int>(p.size()) != n) throw InputError("sample point has wrong dimension");
    for (int i = 0; i < n; ++i) {
      if (!(std::abs(p[static_cast<std::size_t>(i)] - probe.center[static_cast<std::size_t>(i)]) <=
            probe.radius + slack)) {
        throw InputError("sample point lies outside the cube");
      }
    }
  }

  auto sweep = [&](int resolution, MarkovRatio* out) {
    std::vector<Point> objective = CubeGrid(probe.center, probe.radius, resolution);
    out->grid_size = objective.size();
    objective.insert(objective.end(), probe.sample.begin(), probe.sample.end());
    const Sweep sw = SolveOnGrid(probe, objective, exec);
    out->lp_count += sw.lp_count;
    return std::make_pair(sw, objective[sw.argmax]);
  };

  MarkovRatio res;
  const auto [coarse, where] = sweep(probe.resolution, &res);
  res.capped = coarse.capped;
  res.value = coarse.value;
  res.argmax = where;
  if (probe.refine) {
    MarkovRatio tmp;
    const auto [fine, unused] = sweep(2 * probe.resolution - 1, &tmp);
    res.lp_count += tmp.lp_count;
    res.refined_value = fine.value;
    res.refined_capped = fine.capped;
    res.refinement_delta = (fine.capped || coarse.capped) ? 0.0 : fine.value - coarse.value;
  }
  return res;
}

SetSampler BuiltinSampler(const std::string& name) {
  if (name == "cube") {
    return [](std::span<const double> c, double r, int res) { return CubeGrid(c, r, res); };
  }
  if (name == "halfspace") {
    return [](std::span<const double> c, double r, int res) {
      std::vector<Point> out;
      for (Point& p : CubeGrid(c, r, res)) {
        if (p[0] >= c[0]) out.push_back(std::move(p));
      }
      return out;
    };
  }
  if (name == "point") {
    return [](std::span<const double> c, double, int) {
      return std::vector<Point>{Point(c.begin(), c.end())};
    };
  }
  if (name == "line") {
    return [](std::span<const double> c, double r, int res) {
      std::vector<Point> out;
      for (int j = 0; j < res; ++j) {
        Point p(c.begin(), c.end());
        p[0] = c[0] + r * (res == 1 ? 0.0 : -1.0 + 2.0 * j / (res - 1));
        out.push_back(std::move(p));
      }
      return out;
    };
  }
  throw InputError("unknown builtin set '" + name + "' (expected cube, halfspace, point, line)");
}

SetSampler FiniteSetSampler(std::vector<Point> points) {
  return [points = std::move(points)](std::span<const double> c, double r, int) {
    std::vector<Point> out;
    for (const Point& p : points) {
      if (p.size() != c.size()) throw InputError("set point has wrong dimension");
      bool inside = true;
      for (std::size_t i = 0; i < c.size(); ++i) inside = inside && std::abs(p[i] - c[i]) <= r;
      if (inside) out.push_back(p);
    }
    return out;
  };
}

const char* VerdictName(MarkovVerdict v) {
  return v == MarkovVerdict::kWeakMarkov ? "WEAK_MARKOV" : "NOT_DETECTED";
}

std::vector<double> DefaultRadii() {
  std::vector<double> r;
  for (int j = 0; j <= 10; ++j) r.push_back(std::ldexp(1.0, -j));
  return r;
}

MarkovClassification ClassifyWeakMarkov(std::span<const double> center, const SetSampler& sampler,
                                        int k, std::span<const double> radii,
                                        const MarkovOptions& options, Execution exec) {
  if (radii.empty()) throw InputError("radii ladder must be nonempty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || !std::isfinite(radii[i])) throw InputError("radii must be positive and finite");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw InputError("radii must be strictly decreasing");
  }
  MarkovClassification out;
  out.radii.assign(radii.begin(), radii.end());

  std::vector<std::vector<Point>> samples(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    samples[i] = sampler(center, radii[i], options.resolution);
  }
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (samples[i].empty()) {
      std::ostringstream msg;
      msg << "empty sample at radius " << radii[i] << "; skipped";
      out.warnings.push_back(msg.str());
    } else {
      live.push_back(i);
    }
  }
  std::vector<MarkovRatio> ratios;
  kernels::Map(exec, live.size(), [&](std::size_t j) {
    const std::size_t i = live[j];
    MarkovProbe probe;
    probe.center.assign(center.begin(), center.end());
    probe.radius = radii[i];
    probe.k = k;
    probe.sample = samples[i];
    probe.resolution = options.resolution;
    probe.cap = options.cap;
    probe.refine = options.refine;
    return ComputeMarkovRatio(probe, Execution::kSerial);
  }, ratios);
  out.min_ratio = INFINITY;
  for (std::size_t j = 0; j < live.size(); ++j) {
    out.used_radii.push_back(radii[live[j]]);
    if (!ratios[j].capped) out.min_ratio = std::min(out.min_ratio, ratios[j].value);
  }
  out.ratios = std::move(ratios);
  out.verdict = out.min_ratio <= options.threshold ? MarkovVerdict::kWeakMarkov
                                                   : MarkovVerdict::kNotDetected;
  return out;
}

}  // namespace ckw
