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

#include "ckw/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ckw/error.hpp"

namespace ckw::lp {

const char* StatusName(Status s) {
  switch (s) {
    case Status::kOptimal:
      return "OPTIMAL";
    case Status::kUnbounded:
      return "UNBOUNDED";
    case Status::kInfeasible:
      return "INFEASIBLE";
    case Status::kSolverError:
      return "SOLVER_ERROR";
  }
  return "UNKNOWN";
}

LinearProgram::LinearProgram(int num_vars, Sense sense)
    : num_vars_(num_vars),
      sense_(sense),
      objective_(static_cast<std::size_t>(num_vars), 0.0),
      lower_(static_cast<std::size_t>(num_vars), 0.0),
      upper_(static_cast<std::size_t>(num_vars), kInf) {
  if (num_vars < 1) throw InputError("linear program needs at least one variable");
  if (num_vars > kMaxDimension) throw SizeError("linear program exceeds the dense variable limit");
}

void LinearProgram::SetObjective(std::span<const double> c) {
  if (static_cast<int>(c.size()) != num_vars_) throw InputError("objective has wrong length");
  objective_.assign(c.begin(), c.end());
}

void LinearProgram::SetBounds(int j, double lower, double upper) {
  if (lower > upper || std::isnan(lower) || std::isnan(upper) || lower == kInf || upper == -kInf) {
    throw InputError("invalid variable bounds");
  }
  lower_.at(static_cast<std::size_t>(j)) = lower;
  upper_.at(static_cast<std::size_t>(j)) = upper;
}

int LinearProgram::AddRow(std::span<const double> coefficients, RowType type, double rhs) {
  if (static_cast<int>(coefficients.size()) != num_vars_) throw InputError("constraint row has wrong length");
  if (!std::isfinite(rhs)) throw InputError("constraint right-hand side must be finite");
  if (num_rows() >= kMaxDimension) throw SizeError("linear program exceeds the dense constraint limit");
  matrix_.insert(matrix_.end(), coefficients.begin(), coefficients.end());
  types_.push_back(type);
  rhs_.push_back(rhs);
  return num_rows() - 1;
}

int LinearProgram::AddAbsRow(std::span<const double> coefficients, double bound) {
  const int first = AddRow(coefficients, RowType::kLessEqual, bound);
  std::vector<double> neg(coefficients.begin(), coefficients.end());
  for (double& v : neg) v = -v;
  AddRow(neg, RowType::kLessEqual, bound);
  return first;
}

namespace {

struct VarMap {
  double offset = 0.0;
  int col[2] = {-1, -1};
  double coef[2] = {0.0, 0.0};
};

struct StdRow {
  std::vector<double> a;  // over standard columns
  RowType type;
  double b;
};

class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), n_(cols), t_(static_cast<std::size_t>(rows + 1) * static_cast<std::size_t>(cols + 1), 0.0) {}

  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j)]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(j)]; }
  double& rhs(int i) { return at(i, n_); }
  double& z(int j) { return at(m_, j); }  // objective row; z(n_) = objective value

  void Pivot(int r, int e) {
    const double p = at(r, e);
    for (int j = 0; j <= n_; ++j) at(r, j) /= p;
    at(r, e) = 1.0;
    for (int i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = at(i, e);
      if (f == 0.0) continue;
      double* row_i = &at(i, 0);
      const double* row_r = &at(r, 0);
      for (int j = 0; j <= n_; ++j) row_i[j] -= f * row_r[j];
      row_i[e] = 0.0;
    }
  }

  int rows() const { return m_; }
  int cols() const { return n_; }

 private:
  int m_;
  int n_;
  std::vector<double> t_;
};

enum class PhaseResult { kOptimal, kUnbounded, kIterationLimit };

}  // namespace

Solution Solve(const LinearProgram& lp, const Options& options) {
  const int nv = lp.num_vars();
  const bool minimize = lp.sense() == Sense::kMinimize;

  // Substitute bounds: every standard column is >= 0.
  std::vector<VarMap> vars(static_cast<std::size_t>(nv));
  int ns = 0;
  std::vector<std::pair<int, double>> bound_rows;  // (std col, upper - lower)
  for (int j = 0; j < nv; ++j) {
    VarMap& v = vars[static_cast<std::size_t>(j)];
    const double lo = lp.lower(j), hi = lp.upper(j);
    if (std::isfinite(lo)) {
      v.offset = lo;
      v.col[0] = ns;
      v.coef[0] = 1.0;
      if (std::isfinite(hi)) bound_rows.emplace_back(ns, hi - lo);
      ++ns;
    } else if (std::isfinite(hi)) {
      v.offset = hi;
      v.col[0] = ns++;
      v.coef[0] = -1.0;
    } else {
      v.col[0] = ns++;
      v.coef[0] = 1.0;
      v.col[1] = ns++;
      v.coef[1] = -1.0;
    }
  }

  std::vector<double> cstd(static_cast<std::size_t>(ns), 0.0);
  double cconst = 0.0;
  for (int j = 0; j < nv; ++j) {
    const double cj = (minimize ? -1.0 : 1.0) * lp.objective()[static_cast<std::size_t>(j)];
    const VarMap& v = vars[static_cast<std::size_t>(j)];
    cconst += cj * v.offset;
    for (int t = 0; t < 2; ++t) {
      if (v.col[t] >= 0) cstd[static_cast<std::size_t>(v.col[t])] += cj * v.coef[t];
    }
  }

  std::vector<StdRow> rows;
  rows.reserve(static_cast<std::size_t>(lp.num_rows()) + bound_rows.size());
  for (int i = 0; i < lp.num_rows(); ++i) {
    StdRow r{std::vector<double>(static_cast<std::size_t>(ns), 0.0), lp.row_type(i), lp.rhs(i)};
    const auto a = lp.row(i);
    for (int j = 0; j < nv; ++j) {
      const double aij = a[static_cast<std::size_t>(j)];
      if (aij == 0.0) continue;
      const VarMap& v = vars[static_cast<std::size_t>(j)];
      r.b -= aij * v.offset;
      for (int t = 0; t < 2; ++t) {
        if (v.col[t] >= 0) r.a[static_cast<std::size_t>(v.col[t])] += aij * v.coef[t];
      }
    }
    rows.push_back(std::move(r));
  }
  for (const auto& [col, width] : bound_rows) {
    StdRow r{std::vector<double>(static_cast<std::size_t>(ns), 0.0), RowType::kLessEqual, width};
    r.a[static_cast<std::size_t>(col)] = 1.0;
    rows.push_back(std::move(r));
  }

  // Normalize to rhs >= 0; sign[i] maps normalized row i back to rows[i].
  const int m = static_cast<int>(rows.size());
  std::vector<double> sign(static_cast<std::size_t>(m), 1.0);
  std::vector<RowType> ntype(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    RowType t = rows[static_cast<std::size_t>(i)].type;
    double s = 1.0;
    if (t == RowType::kGreaterEqual) {
      s = -1.0;
      t = RowType::kLessEqual;
    }
    if (s * rows[static_cast<std::size_t>(i)].b < 0.0) {
      s = -s;
      if (t == RowType::kLessEqual) t = RowType::kGreaterEqual;
    }
    sign[static_cast<std::size_t>(i)] = s;
    ntype[static_cast<std::size_t>(i)] = t;
  }

  int nslack = 0, nart = 0;
  for (RowType t : ntype) {
    if (t != RowType::kEqual) ++nslack;
    if (t != RowType::kLessEqual) ++nart;
  }
  const int ncols = ns + nslack + nart;
  if (static_cast<double>(m + 1) * static_cast<double>(ncols + 1) > 6e7) {
    throw SizeError("linear program tableau exceeds the dense size limit");
  }
  const int art_begin = ns + nslack;

  Tableau tab(m, ncols);
  std::vector<int> basis(static_cast<std::size_t>(m));
  std::vector<int> identity_col(static_cast<std::size_t>(m));
  {
    int slack = ns, art = art_begin;
    for (int i = 0; i < m; ++i) {
      const StdRow& r = rows[static_cast<std::size_t>(i)];
      const double s = sign[static_cast<std::size_t>(i)];
      for (int j = 0; j < ns; ++j) tab.at(i, j) = s * r.a[static_cast<std::size_t>(j)];
      tab.rhs(i) = s * r.b;
      switch (ntype[static_cast<std::size_t>(i)]) {
        case RowType::kLessEqual:
          tab.at(i, slack) = 1.0;
          identity_col[static_cast<std::size_t>(i)] = slack++;
          break;
        case RowType::kGreaterEqual:
          tab.at(i, slack++) = -1.0;
          tab.at(i, art) = 1.0;
          identity_col[static_cast<std::size_t>(i)] = art++;
          break;
        case RowType::kEqual:
          tab.at(i, art) = 1.0;
          identity_col[static_cast<std::size_t>(i)] = art++;
          break;
      }
      basis[static_cast<std::size_t>(i)] = identity_col[static_cast<std::size_t>(i)];
    }
  }

  double bscale = 1.0;
  for (const StdRow& r : rows) bscale = std::max(bscale, std::abs(r.b));
  double cscale = 1.0;
  for (double c : cstd) cscale = std::max(cscale, std::abs(c));

  Solution sol;
  const int max_iter = options.max_iterations > 0 ? options.max_iterations : 50 * (m + ncols) + 1000;

  auto set_costs = [&](const std::vector<double>& cost) {
    for (int j = 0; j <= ncols; ++j) tab.z(j) = 0.0;
    for (int j = 0; j < ncols; ++j) tab.z(j) = -cost[static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i) {
      const double cb = cost[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])];
      if (cb == 0.0) continue;
      for (int j = 0; j <= ncols; ++j) tab.z(j) += cb * tab.at(i, j);
    }
  };

  auto run_phase = [&](int allowed_cols, double cost_tol) {
    while (true) {
      if (sol.iterations >= max_iter) return PhaseResult::kIterationLimit;
      int e = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (tab.z(j) < -cost_tol) {
          e = j;
          break;
        }
      }
      if (e < 0) return PhaseResult::kOptimal;
      int r = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        const double a = tab.at(i, e);
        if (a <= options.pivot_tol) continue;
        const double ratio = tab.rhs(i) / a;
        if (r < 0 || ratio < best - 1e-12 * (1.0 + std::abs(best))) {
          r = i;
          best = ratio;
        } else if (std::abs(ratio - best) <= 1e-12 * (1.0 + std::abs(best)) &&
                   basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(r)]) {
          r = i;
          best = std::min(best, ratio);
        }
      }
      if (r < 0) return PhaseResult::kUnbounded;
      tab.Pivot(r, e);
      basis[static_cast<std::size_t>(r)] = e;
      ++sol.iterations;
    }
  };

  auto fail = [&](const std::string& why) {
    sol.status = Status::kSolverError;
    std::ostringstream msg;
    msg << why << " after " << sol.iterations << " pivots (rows=" << m << ", cols=" << ncols << ")";
    sol.log.push_back(msg.str());
    return sol;
  };

  // Phase 1: maximize -sum(artificials).
  if (nart > 0) {
    std::vector<double> c1(static_cast<std::size_t>(ncols), 0.0);
    for (int j = art_begin; j < ncols; ++j) c1[static_cast<std::size_t>(j)] = -1.0;
    set_costs(c1);
    const PhaseResult p1 = run_phase(ncols, options.cost_tol);
    if (p1 == PhaseResult::kIterationLimit) return fail("phase 1 iteration limit");
    if (tab.z(ncols) < -options.feasibility_tol * bscale) {
      sol.status = Status::kInfeasible;
      return sol;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (basis[static_cast<std::size_t>(i)] < art_begin) continue;
      for (int j = 0; j < art_begin; ++j) {
        if (std::abs(tab.at(i, j)) > options.pivot_tol) {
          tab.Pivot(i, j);
          basis[static_cast<std::size_t>(i)] = j;
          break;
        }
      }
    }
  }

  // Phase 2.
  std::vector<double> c2(static_cast<std::size_t>(ncols), 0.0);
  for (int j = 0; j < ns; ++j) c2[static_cast<std::size_t>(j)] = cstd[static_cast<std::size_t>(j)];
  set_costs(c2);
  const PhaseResult p2 = run_phase(art_begin, options.cost_tol * cscale);
  if (p2 == PhaseResult::kIterationLimit) return fail("phase 2 iteration limit");
  if (p2 == PhaseResult::kUnbounded) {
    sol.status = Status::kUnbounded;
    return sol;
  }

  // Primal in standard columns.
  std::vector<double> xs(static_cast<std::size_t>(ns), 0.0);
  for (int i = 0; i < m; ++i) {
    const int b = basis[static_cast<std::size_t>(i)];
    if (b < ns) xs[static_cast<std::size_t>(b)] = std::max(0.0, tab.rhs(i));
  }
  // Duals of the standard rows (maximization form).
  std::vector<double> ystd(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    ystd[static_cast<std::size_t>(i)] = sign[static_cast<std::size_t>(i)] * tab.z(identity_col[static_cast<std::size_t>(i)]);
  }

  // Certificate.
  double primal_obj = 0.0, dual_obj = 0.0, dual_res = 0.0, compl_res = 0.0;
  for (int j = 0; j < ns; ++j) primal_obj += cstd[static_cast<std::size_t>(j)] * xs[static_cast<std::size_t>(j)];
  for (int j = 0; j < ns; ++j) {
    double r = -cstd[static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i) r += ystd[static_cast<std::size_t>(i)] * rows[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(j)];
    dual_res = std::max(dual_res, -r);
  }
  for (int i = 0; i < m; ++i) {
    const StdRow& r = rows[static_cast<std::size_t>(i)];
    const double y = ystd[static_cast<std::size_t>(i)];
    dual_obj += r.b * y;
    if (r.type == RowType::kLessEqual) dual_res = std::max(dual_res, -y);
    if (r.type == RowType::kGreaterEqual) dual_res = std::max(dual_res, y);
    double ax = 0.0;
    for (int j = 0; j < ns; ++j) ax += r.a[static_cast<std::size_t>(j)] * xs[static_cast<std::size_t>(j)];
    if (r.type != RowType::kEqual) compl_res = std::max(compl_res, std::abs((r.b - ax) * y));
  }

  sol.primal.assign(static_cast<std::size_t>(nv), 0.0);
  for (int j = 0; j < nv; ++j) {
    const VarMap& v = vars[static_cast<std::size_t>(j)];
    double x = v.offset;
    for (int t = 0; t < 2; ++t) {
      if (v.col[t] >= 0) x += v.coef[t] * xs[static_cast<std::size_t>(v.col[t])];
    }
    sol.primal[static_cast<std::size_t>(j)] = x;
  }
  double pres = 0.0;
  for (int i = 0; i < lp.num_rows(); ++i) {
    const auto a = lp.row(i);
    double ax = 0.0;
    for (int j = 0; j < nv; ++j) ax += a[static_cast<std::size_t>(j)] * sol.primal[static_cast<std::size_t>(j)];
    const double b = lp.rhs(i);
    switch (lp.row_type(i)) {
      case RowType::kLessEqual:
        pres = std::max(pres, ax - b);
        break;
      case RowType::kGreaterEqual:
        pres = std::max(pres, b - ax);
        break;
      case RowType::kEqual:
        pres = std::max(pres, std::abs(ax - b));
        break;
    }
  }
  for (int j = 0; j < nv; ++j) {
    const double x = sol.primal[static_cast<std::size_t>(j)];
    pres = std::max(pres, lp.lower(j) - x);
    pres = std::max(pres, x - lp.upper(j));
  }

  const double sgn = minimize ? -1.0 : 1.0;
  sol.optimum = 0.0;
  for (int j = 0; j < nv; ++j) sol.optimum += lp.objective()[static_cast<std::size_t>(j)] * sol.primal[static_cast<std::size_t>(j)];
  sol.dual_optimum = sgn * (dual_obj + cconst);
  sol.dual.assign(static_cast<std::size_t>(lp.num_rows()), 0.0);
  for (int i = 0; i < lp.num_rows(); ++i) sol.dual[static_cast<std::size_t>(i)] = sgn * ystd[static_cast<std::size_t>(i)];
  sol.primal_residual = pres;
  sol.dual_residual = dual_res;
  sol.duality_gap = std::abs(primal_obj - dual_obj);
  sol.complementarity = compl_res;

  const double opt_scale = 1.0 + std::abs(sol.optimum);
  if (pres > options.feasibility_tol * bscale) {
    std::ostringstream msg;
    msg << "primal residual " << pres << " above tolerance";
    return fail(msg.str());
  }
  if (sol.duality_gap > options.gap_tol * opt_scale) {
    std::ostringstream msg;
    msg << "duality gap " << sol.duality_gap << " above tolerance";
    return fail(msg.str());
  }
  if (dual_res > 1e-7 * cscale) {
    std::ostringstream msg;
    msg << "dual residual " << dual_res << " above tolerance";
    return fail(msg.str());
  }
  sol.status = Status::kOptimal;
  return sol;
}

}  // namespace ckw::lp
