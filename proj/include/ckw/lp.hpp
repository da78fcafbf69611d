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

#ifndef CKW_LP_HPP_
#define CKW_LP_HPP_

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace ckw::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Sense { kMaximize, kMinimize };
enum class RowType { kLessEqual, kGreaterEqual, kEqual };
enum class Status { kOptimal, kUnbounded, kInfeasible, kSolverError };

const char* StatusName(Status s);

// Dense LP: optimize c.x subject to rows a_i.x (<=|>=|=) b_i and
// lower_j <= x_j <= upper_j. Variables default to [0, +inf).
class LinearProgram {
 public:
  LinearProgram(int num_vars, Sense sense);

  int num_vars() const { return num_vars_; }
  int num_rows() const { return static_cast<int>(rhs_.size()); }
  Sense sense() const { return sense_; }

  void SetObjective(std::span<const double> c);
  void SetObjective(int j, double c) { objective_.at(static_cast<std::size_t>(j)) = c; }
  void SetBounds(int j, double lower, double upper);
  void SetFree(int j) { SetBounds(j, -kInf, kInf); }
  // Returns the row index.
  int AddRow(std::span<const double> coefficients, RowType type, double rhs);
  // |a.x| <= b as the pair a.x <= b, -a.x <= b (two rows; first index returned).
  int AddAbsRow(std::span<const double> coefficients, double bound);

  const std::vector<double>& objective() const { return objective_; }
  std::span<const double> row(int i) const {
    return {matrix_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(num_vars_),
            static_cast<std::size_t>(num_vars_)};
  }
  RowType row_type(int i) const { return types_[static_cast<std::size_t>(i)]; }
  double rhs(int i) const { return rhs_[static_cast<std::size_t>(i)]; }
  double lower(int j) const { return lower_[static_cast<std::size_t>(j)]; }
  double upper(int j) const { return upper_[static_cast<std::size_t>(j)]; }

 private:
  int num_vars_;
  Sense sense_;
  std::vector<double> objective_;
  std::vector<double> matrix_;
  std::vector<RowType> types_;
  std::vector<double> rhs_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

struct Solution {
  Status status = Status::kSolverError;
  double optimum = 0.0;
  std::vector<double> primal;  // original variables
  // One multiplier per row: y_i = d(optimum)/d(b_i). For maximization this is
  // >= 0 on <= rows and <= 0 on >= rows; signs flip for minimization.
  std::vector<double> dual;
  double dual_optimum = 0.0;
  double primal_residual = 0.0;      // max constraint/bound violation
  double dual_residual = 0.0;        // max dual infeasibility (standard form)
  double duality_gap = 0.0;          // |primal - dual| objective (standard form)
  double complementarity = 0.0;      // max |slack_i * y_i|
  int iterations = 0;
  std::vector<std::string> log;      // filled on kSolverError
};

struct Options {
  double pivot_tol = 1e-9;
  double cost_tol = 1e-10;
  double feasibility_tol = 1e-9;
  double gap_tol = 1e-7;
  int max_iterations = 0;  // 0: automatic
};

// Dense two-phase primal simplex with Bland's rule. Deterministic: identical
// programs yield identical pivot sequences.
Solution Solve(const LinearProgram& lp, const Options& options = {});

// Dense size guard.
inline constexpr int kMaxDimension = 10000;

}  // namespace ckw::lp

#endif  // CKW_LP_HPP_
