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

#ifndef CKW_PREDUAL_HPP_
#define CKW_PREDUAL_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ckw/jet.hpp"
#include "ckw/kernels.hpp"
#include "ckw/lp.hpp"
#include "ckw/whitney.hpp"

namespace ckw {

// delta_x^alpha: f -> D^alpha f(x).
struct DeltaAtom {
  Point x;
  MultiIndex alpha;
};

// (delta_x^alpha - delta_y^alpha) / omega(|x - y|), |alpha| = k.
struct DifferenceAtom {
  Point x;
  Point y;
  MultiIndex alpha;
};

using Atom = std::variant<DeltaAtom, DifferenceAtom>;

std::string DescribeAtom(const Atom& atom);

// Finite combination sum_i c_i v_i of atoms. Atoms are stored canonically
// (difference atoms with x < y lexicographically; swapping the endpoints
// negates the coefficient), duplicates are merged and zero coefficients
// dropped.
class AtomicFunctional {
 public:
  explicit AtomicFunctional(NormContext ctx);

  const NormContext& context() const { return ctx_; }
  AtomicFunctional& Add(const Atom& atom, double coefficient);

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<std::pair<Atom, double>>& terms() const { return terms_; }

  // Distinct points carried by the atoms, sorted lexicographically.
  std::vector<Point> Support() const;

  AtomicFunctional Scaled(double s) const;
  AtomicFunctional Plus(const AtomicFunctional& other) const;

 private:
  NormContext ctx_;
  std::vector<std::pair<Atom, double>> terms_;  // sorted by atom key
};

// <f, g>. The field must contain every atom point with jets of order >= |alpha|.
double Pair(const WhitneyField& f, const AtomicFunctional& g);
double Pair(const SmoothFunction& f, const AtomicFunctional& g);

struct PredualNormResult {
  double value = 0.0;
  std::vector<Point> support;
  std::vector<double> optimal_u;  // maximizer: values on the support
  lp::Solution lp;
};

// Exact norm of a k = 0 functional: max sum c_i u_i over |u_i| <= 1,
// |u_i - u_j| <= omega(|x_i - x_j|). Atoms with |alpha| > 0 are unsupported.
PredualNormResult PredualNormK0(const AtomicFunctional& g, const Modulus& omega);

struct PredualBracket {
  double lo = 0.0;
  double hi = 0.0;
  bool exact = false;  // k = 0: lo == hi is the norm
  std::vector<Point> support;
  lp::Solution lo_lp;
  lp::Solution hi_lp;
};

// lo: max <c, g> over jets c on the support with |c_alpha| <= 1 and the
//     Taylor-compatibility constraints |D^alpha (T_x - T_y)(z)| <=
//     omega(|x-y|) |x-y|^{k-|alpha|}, z in {x, y}.
// hi: min sum |a_v| over decompositions g = sum a_v v into atoms supported on
//     the support points.
PredualBracket PredualNormBracket(const AtomicFunctional& g);

struct FinitenessReport {
  double full = 0.0;         // trace norm on S (lambda)
  double subset_sup = 0.0;   // max over subsets of size <= d
  double ratio = 1.0;        // full / subset_sup, 0/0 = 1
  int d = 0;
  std::vector<std::size_t> witness;  // first subset (lexicographic) attaining subset_sup
  std::size_t subsets_total = 0;
  std::size_t subsets_examined = 0;
  bool early_exit = false;
};

inline constexpr std::size_t kMaxSubsets = 1000000;

// Compares the trace norm of the field with the largest trace norm over
// subsets of cardinality <= d. Subsets are enumerated lexicographically;
// enumeration stops once a subset attains the full value.
FinitenessReport FinitenessGap(const WhitneyField& field, int d, const NormContext& ctx,
                               Execution exec = Execution::kParallel);

// Number of subsets of size min(d, m) of an m-set, saturating at max + 1.
std::size_t SubsetCount(std::size_t m, std::size_t d, std::size_t max);

}  // namespace ckw

#endif  // CKW_PREDUAL_HPP_
