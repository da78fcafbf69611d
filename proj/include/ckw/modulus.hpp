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

#ifndef CKW_MODULUS_HPP_
#define CKW_MODULUS_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ckw {

// A modulus of continuity omega on (0, inf).
//
// Admissible moduli satisfy
//   (i)  omega(t) and t / omega(t) are nondecreasing,
//   (ii) omega(t) -> 0 as t -> 0+.
// Construction does not enforce (i) for table moduli; use Validate() on a grid.
//
// Kinds:
//   power(a)        omega(t) = t^a, a in (0, 1]
//   linear          omega(t) = t
//   capped(a, cap)  omega(t) = min(t^a, cap)
//   table           piecewise linear through (0, 0) and the breakpoints,
//                   constant beyond the last breakpoint
class Modulus {
 public:
  enum class Kind { kPower, kLinear, kCapped, kTable };

  static Modulus Power(double exponent);
  static Modulus Linear();
  static Modulus Capped(double exponent, double cap);
  // Breakpoints (t, w) with t > 0 strictly increasing and w >= 0.
  static Modulus Table(std::vector<std::pair<double, double>> breakpoints);

  // omega(t). Throws DomainError for t <= 0 or non-finite t.
  double operator()(double t) const;
  double Eval(double t) const { return (*this)(t); }

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }
  double cap() const { return cap_; }
  const std::vector<std::pair<double, double>>& breakpoints() const {
    return breakpoints_;
  }

  std::string Describe() const;

 private:
  Modulus(Kind kind, double exponent, double cap,
          std::vector<std::pair<double, double>> breakpoints)
      : kind_(kind),
        exponent_(exponent),
        cap_(cap),
        breakpoints_(std::move(breakpoints)) {}

  Kind kind_;
  double exponent_ = 1.0;
  double cap_ = 0.0;
  std::vector<std::pair<double, double>> breakpoints_;
};

enum class ModulusAxiom {
  kNondecreasing,          // omega nondecreasing
  kRatioNondecreasing,     // t / omega(t) nondecreasing
  kVanishesAtZero,         // omega(t) -> 0 as t -> 0+
};

const char* AxiomName(ModulusAxiom axiom);

struct AxiomViolation {
  ModulusAxiom axiom;
  double t_i;
  double t_j;
  double value_i;
  double value_j;
};

struct ValidationReport {
  std::vector<double> grid;
  std::vector<AxiomViolation> violations;
  // Axiom (ii) probe: omega(vanishing_threshold) < vanishing_epsilon was
  // required; threshold is 0 when no such point was found.
  double vanishing_epsilon = 0.0;
  double vanishing_threshold = 0.0;

  bool ok() const { return violations.empty(); }
};

// Relative slack used when comparing consecutive grid values.
inline constexpr double kAxiomRelTol = 1e-12;

// Checks the axioms on consecutive pairs of a sorted grid (>= 2 positive
// points). Axiom (ii) is checked by searching t = grid[0] * 2^-j for a point
// with omega(t) < 1e-3 * omega(grid[0]).
ValidationReport Validate(const Modulus& omega, std::span<const double> grid);

// Geometric grid 10^-6 .. 10^6 with 10 points per decade.
std::vector<double> DefaultValidationGrid();

// 1 / omega(probe), a proxy for lim_{t -> inf} 1 / omega(t). probe >= 1.
double LimitAtInfinityReciprocal(const Modulus& omega, double probe);

}  // namespace ckw

#endif  // CKW_MODULUS_HPP_
