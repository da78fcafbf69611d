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

#include "ckw/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ckw/error.hpp"

namespace ckw {

Modulus Modulus::Power(double exponent) {
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw InputError("power modulus exponent must lie in (0, 1]");
  }
  return Modulus(Kind::kPower, exponent, 0.0, {});
}

Modulus Modulus::Linear() { return Modulus(Kind::kLinear, 1.0, 0.0, {}); }

Modulus Modulus::Capped(double exponent, double cap) {
  if (!(exponent > 0.0 && exponent <= 1.0)) {
    throw InputError("capped modulus exponent must lie in (0, 1]");
  }
  if (!(cap > 0.0) || !std::isfinite(cap)) {
    throw InputError("capped modulus cap must be positive and finite");
  }
  return Modulus(Kind::kCapped, exponent, cap, {});
}

Modulus Modulus::Table(std::vector<std::pair<double, double>> breakpoints) {
  if (breakpoints.empty()) {
    throw InputError("table modulus needs at least one breakpoint");
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    const auto [t, w] = breakpoints[i];
    if (!(t > 0.0) || !std::isfinite(t) || !(w >= 0.0) || !std::isfinite(w)) {
      throw InputError("table modulus breakpoints need t > 0 and w >= 0");
    }
    if (i > 0 && !(t > breakpoints[i - 1].first)) {
      throw InputError("table modulus breakpoints must be strictly increasing in t");
    }
  }
  return Modulus(Kind::kTable, 1.0, 0.0, std::move(breakpoints));
}

double Modulus::operator()(double t) const {
  if (!(t > 0.0) || !std::isfinite(t)) {
    std::ostringstream msg;
    msg << "modulus evaluated outside (0, inf): t = " << t;
    throw DomainError(msg.str());
  }
  switch (kind_) {
    case Kind::kLinear:
      return t;
    case Kind::kPower:
      return exponent_ == 1.0 ? t : std::pow(t, exponent_);
    case Kind::kCapped:
      return std::min(exponent_ == 1.0 ? t : std::pow(t, exponent_), cap_);
    case Kind::kTable: {
      const auto& bp = breakpoints_;
      if (t >= bp.back().first) return bp.back().second;
      // First breakpoint with bp.first > t.
      auto it = std::upper_bound(
          bp.begin(), bp.end(), t,
          [](double v, const std::pair<double, double>& p) { return v < p.first; });
      const double t1 = it->first, w1 = it->second;
      double t0 = 0.0, w0 = 0.0;
      if (it != bp.begin()) {
        t0 = std::prev(it)->first;
        w0 = std::prev(it)->second;
      }
      return w0 + (w1 - w0) * (t - t0) / (t1 - t0);
    }
  }
  return t;
}

std::string Modulus::Describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::kLinear:
      out << "linear";
      break;
    case Kind::kPower:
      out << "power(" << exponent_ << ")";
      break;
    case Kind::kCapped:
      out << "capped(" << exponent_ << ", cap=" << cap_ << ")";
      break;
    case Kind::kTable:
      out << "table(" << breakpoints_.size() << " breakpoints)";
      break;
  }
  return out.str();
}

const char* AxiomName(ModulusAxiom axiom) {
  switch (axiom) {
    case ModulusAxiom::kNondecreasing:
      return "omega nondecreasing";
    case ModulusAxiom::kRatioNondecreasing:
      return "t/omega(t) nondecreasing";
    case ModulusAxiom::kVanishesAtZero:
      return "omega(t) -> 0 as t -> 0+";
  }
  return "unknown";
}

ValidationReport Validate(const Modulus& omega, std::span<const double> grid) {
  if (grid.size() < 2) throw InputError("validation grid needs at least 2 points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i])) {
      throw InputError("validation grid points must be positive and finite");
    }
    if (i > 0 && grid[i] < grid[i - 1]) {
      throw InputError("validation grid must be sorted ascending");
    }
  }

  ValidationReport report;
  report.grid.assign(grid.begin(), grid.end());

  std::vector<double> w(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) w[i] = omega(grid[i]);

  auto below = [](double a, double b) {
    // a < b beyond rounding noise
    return a < b - kAxiomRelTol * std::max(std::abs(a), std::abs(b));
  };

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double ti = grid[i], tj = grid[i + 1];
    if (below(w[i + 1], w[i])) {
      report.violations.push_back(
          {ModulusAxiom::kNondecreasing, ti, tj, w[i], w[i + 1]});
    }
    // t / omega(t) with omega(t) = 0 is +inf; a zero value followed by a
    // positive one is a violation.
    const double ri = w[i] > 0.0 ? ti / w[i] : INFINITY;
    const double rj = w[i + 1] > 0.0 ? tj / w[i + 1] : INFINITY;
    if (std::isinf(ri) ? !std::isinf(rj) : below(rj, ri)) {
      report.violations.push_back(
          {ModulusAxiom::kRatioNondecreasing, ti, tj, ri, rj});
    }
  }

  const double t0 = grid.front();
  const double w0 = w.front();
  report.vanishing_epsilon = 1e-3 * w0;
  double t = t0;
  double wt = w0;
  while (t > 0.0) {
    wt = omega(t);
    if (wt < report.vanishing_epsilon || wt == 0.0) break;
    t *= 0.5;
    if (t < std::numeric_limits<double>::min()) {
      t = 0.0;
      break;
    }
  }
  report.vanishing_threshold = t;
  if (t == 0.0) {
    report.violations.push_back({ModulusAxiom::kVanishesAtZero, std::numeric_limits<double>::min(), t0, wt, w0});
  }
  return report;
}

std::vector<double> DefaultValidationGrid() {
  std::vector<double> grid;
  for (int j = -60; j <= 60; ++j) grid.push_back(std::pow(10.0, j / 10.0));
  return grid;
}

double LimitAtInfinityReciprocal(const Modulus& omega, double probe) {
  if (!(probe >= 1.0) || !std::isfinite(probe)) {
    throw InputError("limit probe must be a finite value >= 1");
  }
  return 1.0 / omega(probe);
}

}  // namespace ckw
