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

#include "ckw/predual.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

#include "ckw/error.hpp"

namespace ckw {

namespace {

using AtomKey = std::tuple<int, Point, Point, std::vector<int>>;

AtomKey KeyOf(const Atom& atom) {
  if (const auto* d = std::get_if<DeltaAtom>(&atom)) {
    return {0, d->x, {}, {d->alpha.entries().begin(), d->alpha.entries().end()}};
  }
  const auto& a = std::get<DifferenceAtom>(atom);
  return {1, a.x, a.y, {a.alpha.entries().begin(), a.alpha.entries().end()}};
}

std::string PointString(const Point& p) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << p[i];
  out << ")";
  return out.str();
}

void CheckFinitePoint(const Point& p, int n) {
  if (static_cast<int>(p.size()) != n) throw InputError("atom point has wrong dimension");
  for (double v : p) {
    if (!std::isfinite(v)) throw InputError("atom point must be finite");
  }
}

std::size_t IndexOfPoint(const std::vector<Point>& support, const Point& p) {
  const auto it = std::lower_bound(support.begin(), support.end(), p);
  return static_cast<std::size_t>(it - support.begin());
}

}  // namespace

std::string DescribeAtom(const Atom& atom) {
  if (const auto* d = std::get_if<DeltaAtom>(&atom)) {
    return "delta" + d->alpha.ToString() + "@" + PointString(d->x);
  }
  const auto& a = std::get<DifferenceAtom>(atom);
  return "diff" + a.alpha.ToString() + "@" + PointString(a.x) + "-" + PointString(a.y);
}

AtomicFunctional::AtomicFunctional(NormContext ctx) : ctx_(std::move(ctx)) { ctx_.Check(); }

AtomicFunctional& AtomicFunctional::Add(const Atom& atom, double coefficient) {
  if (!std::isfinite(coefficient)) throw InputError("atom coefficient must be finite");
  Atom canonical = atom;
  if (auto* d = std::get_if<DeltaAtom>(&canonical)) {
    CheckFinitePoint(d->x, ctx_.n);
    if (d->alpha.dim() != ctx_.n) throw InputError("atom multi-index has wrong dimension");
    if (d->alpha.order() > ctx_.k) throw InputError("delta atom needs |alpha| <= k");
  } else {
    auto& a = std::get<DifferenceAtom>(canonical);
    CheckFinitePoint(a.x, ctx_.n);
    CheckFinitePoint(a.y, ctx_.n);
    if (a.alpha.dim() != ctx_.n) throw InputError("atom multi-index has wrong dimension");
    if (a.alpha.order() != ctx_.k) throw InputError("difference atom needs |alpha| = k");
    if (a.x == a.y) throw InputError("difference atom needs x != y");
    if (a.y < a.x) {
      std::swap(a.x, a.y);
      coefficient = -coefficient;
    }
  }
  const AtomKey key = KeyOf(canonical);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const auto& term, const AtomKey& k) { return KeyOf(term.first) < k; });
  if (it != terms_.end() && KeyOf(it->first) == key) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  } else if (coefficient != 0.0) {
    terms_.insert(it, {std::move(canonical), coefficient});
  }
  return *this;
}

std::vector<Point> AtomicFunctional::Support() const {
  std::vector<Point> pts;
  for (const auto& [atom, c] : terms_) {
    if (const auto* d = std::get_if<DeltaAtom>(&atom)) {
      pts.push_back(d->x);
    } else {
      const auto& a = std::get<DifferenceAtom>(atom);
      pts.push_back(a.x);
      pts.push_back(a.y);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

AtomicFunctional AtomicFunctional::Scaled(double s) const {
  AtomicFunctional out(ctx_);
  for (const auto& [atom, c] : terms_) out.Add(atom, s * c);
  return out;
}

AtomicFunctional AtomicFunctional::Plus(const AtomicFunctional& other) const {
  if (other.ctx_.k != ctx_.k || other.ctx_.n != ctx_.n) {
    throw InputError("functionals live in different spaces");
  }
  AtomicFunctional out = *this;
  for (const auto& [atom, c] : other.terms_) out.Add(atom, c);
  return out;
}

namespace {

template <class Eval>
double PairWith(const AtomicFunctional& g, Eval&& eval) {
  double total = 0.0;
  for (const auto& [atom, c] : g.terms()) {
    if (const auto* d = std::get_if<DeltaAtom>(&atom)) {
      total += c * eval(d->x, d->alpha);
    } else {
      const auto& a = std::get<DifferenceAtom>(atom);
      const double w = g.context().omega(Distance(a.x, a.y));
      total += c * (eval(a.x, a.alpha) - eval(a.y, a.alpha)) / w;
    }
  }
  return total;
}

}  // namespace

double Pair(const WhitneyField& f, const AtomicFunctional& g) {
  if (f.dim() != g.context().n) throw InputError("field dimension does not match the functional");
  std::map<Point, std::size_t> where;
  for (std::size_t i = 0; i < f.size(); ++i) where.emplace(f.point(i), i);
  return PairWith(g, [&](const Point& x, const MultiIndex& alpha) {
    const auto it = where.find(x);
    if (it == where.end()) throw InputError("missing derivative: no jet at " + PointString(x));
    if (alpha.order() > f.order()) {
      throw InputError("missing derivative: order " + std::to_string(alpha.order()) + " at " +
                       PointString(x));
    }
    return f.jet(it->second).Coefficient(alpha);
  });
}

double Pair(const SmoothFunction& f, const AtomicFunctional& g) {
  if (f.dim != g.context().n) throw InputError("function dimension does not match the functional");
  return PairWith(g, [&](const Point& x, const MultiIndex& alpha) {
    if (alpha.order() > f.max_order) {
      throw InputError("missing derivative: order " + std::to_string(alpha.order()));
    }
    return f.derivative(x, alpha);
  });
}

namespace {

void RequireOptimal(const lp::Solution& s, const char* what) {
  if (s.status == lp::Status::kOptimal) return;
  std::ostringstream msg;
  msg << what << ": LP returned " << lp::StatusName(s.status);
  for (const auto& line : s.log) msg << "; " << line;
  throw NumericalError(msg.str());
}

}  // namespace

PredualNormResult PredualNormK0(const AtomicFunctional& g, const Modulus& omega) {
  for (const auto& [atom, c] : g.terms()) {
    const MultiIndex& alpha = std::holds_alternative<DeltaAtom>(atom)
                                  ? std::get<DeltaAtom>(atom).alpha
                                  : std::get<DifferenceAtom>(atom).alpha;
    if (alpha.order() != 0) {
      throw UnsupportedError("exact predual norm needs k = 0 atoms; got " + DescribeAtom(atom));
    }
  }
  PredualNormResult res;
  res.support = g.Support();
  const std::size_t m = res.support.size();
  if (m == 0) return res;

  std::vector<double> c(m, 0.0);
  for (const auto& [atom, coef] : g.terms()) {
    if (const auto* d = std::get_if<DeltaAtom>(&atom)) {
      c[IndexOfPoint(res.support, d->x)] += coef;
    } else {
      const auto& a = std::get<DifferenceAtom>(atom);
      const double w = omega(Distance(a.x, a.y));
      c[IndexOfPoint(res.support, a.x)] += coef / w;
      c[IndexOfPoint(res.support, a.y)] -= coef / w;
    }
  }

  const int vars = static_cast<int>(m);
  lp::LinearProgram prog(vars, lp::Sense::kMaximize);
  prog.SetObjective(c);
  for (int j = 0; j < vars; ++j) prog.SetBounds(j, -1.0, 1.0);
  std::vector<double> row(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double w = omega(Distance(res.support[i], res.support[j]));
      // Pairs with omega >= 2 are implied by the bounds.
      if (w >= 2.0) continue;
      row[i] = 1.0;
      row[j] = -1.0;
      prog.AddAbsRow(row, w);
      row[i] = row[j] = 0.0;
    }
  }
  res.lp = lp::Solve(prog);
  RequireOptimal(res.lp, "k = 0 predual norm");
  res.value = res.lp.optimum;
  res.optimal_u = res.lp.primal;
  return res;
}

PredualBracket PredualNormBracket(const AtomicFunctional& g) {
  const NormContext& ctx = g.context();
  PredualBracket br;
  br.support = g.Support();
  if (br.support.empty()) {
    br.exact = true;
    return br;
  }
  if (ctx.k == 0) {
    PredualNormResult r = PredualNormK0(g, ctx.omega);
    br.lo = br.hi = r.value;
    br.exact = true;
    br.lo_lp = r.lp;
    br.hi_lp = std::move(r.lp);
    return br;
  }

  const auto set = IndexSetFor(ctx.n, ctx.k);
  const std::size_t q = set->size();
  const std::size_t m = br.support.size();
  const auto [top_first, top_last] = set->OrderRange(ctx.k);

  // Coordinates of g in the jet space: g(c) = sum_{i, alpha} w[i q + alpha] c_{i, alpha}.
  std::vector<double> w(m * q, 0.0);
  for (const auto& [atom, coef] : g.terms()) {
    if (const auto* d = std::get_if<DeltaAtom>(&atom)) {
      w[IndexOfPoint(br.support, d->x) * q + set->IndexOf(d->alpha)] += coef;
    } else {
      const auto& a = std::get<DifferenceAtom>(atom);
      const double om = ctx.omega(Distance(a.x, a.y));
      const std::size_t ai = set->IndexOf(a.alpha);
      w[IndexOfPoint(br.support, a.x) * q + ai] += coef / om;
      w[IndexOfPoint(br.support, a.y) * q + ai] -= coef / om;
    }
  }

  // lo
  {
    const int vars = static_cast<int>(m * q);
    lp::LinearProgram prog(vars, lp::Sense::kMaximize);
    prog.SetObjective(w);
    for (int j = 0; j < vars; ++j) prog.SetBounds(j, -1.0, 1.0);
    std::vector<double> row(static_cast<std::size_t>(vars), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const Point& xi = br.support[i];
        const Point& xj = br.support[j];
        const double d = Distance(xi, xj);
        const double om = ctx.omega(d);
        for (int zi = 0; zi < 2; ++zi) {
          const Point& z = zi == 0 ? xi : xj;
          for (std::size_t a = 0; a < q; ++a) {
            const MultiIndex& alpha = (*set)[a];
            std::fill(row.begin(), row.end(), 0.0);
            // D^alpha T_x(z) = sum_{beta >= alpha} c_beta (z - x)^{beta - alpha} / (beta - alpha)!
            for (std::size_t b = 0; b < q; ++b) {
              const MultiIndex& beta = (*set)[b];
              if (!beta.Dominates(alpha)) continue;
              const MultiIndex gap = beta - alpha;
              std::vector<double> hi(static_cast<std::size_t>(ctx.n)), hj(hi.size());
              for (int t = 0; t < ctx.n; ++t) {
                hi[static_cast<std::size_t>(t)] = z[static_cast<std::size_t>(t)] - xi[static_cast<std::size_t>(t)];
                hj[static_cast<std::size_t>(t)] = z[static_cast<std::size_t>(t)] - xj[static_cast<std::size_t>(t)];
              }
              row[i * q + b] += gap.Power(hi) / gap.Factorial();
              row[j * q + b] -= gap.Power(hj) / gap.Factorial();
            }
            prog.AddAbsRow(row, om * std::pow(d, ctx.k - alpha.order()));
          }
        }
      }
    }
    br.lo_lp = lp::Solve(prog);
    RequireOptimal(br.lo_lp, "predual lower bound");
    br.lo = br.lo_lp.optimum;
  }

  // hi: atoms delta_{x_i}^alpha and differences on support pairs, split into
  // positive and negative parts.
  {
    struct Column {
      std::size_t i, j, alpha;
      bool difference;
    };
    std::vector<Column> cols;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t a = 0; a < q; ++a) cols.push_back({i, i, a, false});
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        for (std::size_t a = top_first; a < top_last; ++a) cols.push_back({i, j, a, true});
      }
    }
    const int vars = static_cast<int>(2 * cols.size());
    lp::LinearProgram prog(vars, lp::Sense::kMinimize);
    for (int v = 0; v < vars; ++v) prog.SetObjective(v, 1.0);
    std::vector<double> row(static_cast<std::size_t>(vars), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t a = 0; a < q; ++a) {
        std::fill(row.begin(), row.end(), 0.0);
        for (std::size_t c = 0; c < cols.size(); ++c) {
          const Column& col = cols[c];
          if (col.alpha != a) continue;
          double coef = 0.0;
          if (!col.difference) {
            coef = col.i == i ? 1.0 : 0.0;
          } else if (col.i == i || col.j == i) {
            const double om = ctx.omega(Distance(br.support[col.i], br.support[col.j]));
            coef = (col.i == i ? 1.0 : -1.0) / om;
          }
          row[2 * c] = coef;
          row[2 * c + 1] = -coef;
        }
        prog.AddRow(row, lp::RowType::kEqual, w[i * q + a]);
      }
    }
    br.hi_lp = lp::Solve(prog);
    RequireOptimal(br.hi_lp, "predual upper bound");
    br.hi = br.hi_lp.optimum;
  }
  return br;
}

std::size_t SubsetCount(std::size_t m, std::size_t d, std::size_t max) {
  const std::size_t r = std::min(d, m);
  // C(m, r) computed incrementally; each partial product is an exact integer.
  long double c = 1.0L;
  for (std::size_t i = 1; i <= r; ++i) {
    c = c * static_cast<long double>(m - r + i) / static_cast<long double>(i);
    if (c > static_cast<long double>(max)) return max + 1;
  }
  return static_cast<std::size_t>(c + 0.5L);
}

FinitenessReport FinitenessGap(const WhitneyField& field, int d, const NormContext& ctx,
                               Execution exec) {
  ctx.Check();
  if (d < 1) throw InputError("subset cardinality d must be >= 1");
  if (field.dim() != ctx.n || field.order() != ctx.k) {
    throw InputError("field does not match the norm context");
  }
  if (field.size() == 0) throw InputError("finiteness check needs a nonempty field");

  FinitenessReport rep;
  rep.d = d;
  rep.full = WhitneyLambda(field, ctx, exec).lambda;

  const std::size_t m = field.size();
  const std::size_t r = std::min<std::size_t>(static_cast<std::size_t>(d), m);
  rep.subsets_total = SubsetCount(m, r, kMaxSubsets);
  if (rep.subsets_total > kMaxSubsets) {
    std::ostringstream msg;
    msg << "C(" << m << ", " << r << ") exceeds the subset guard of " << kMaxSubsets;
    throw SizeError(msg.str());
  }

  // The trace norm only grows with the set, so subsets of size exactly r
  // suffice.
  std::vector<std::size_t> comb(r);
  for (std::size_t i = 0; i < r; ++i) comb[i] = i;
  bool more = true;
  auto advance = [&]() {
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (comb[i] < m - r + i) {
        ++comb[i];
        for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  constexpr std::size_t kBlock = 2048;
  std::vector<std::vector<std::size_t>> block;
  bool have = false;
  double best = 0.0;
  while (more) {
    block.clear();
    while (more && block.size() < kBlock) {
      block.push_back(comb);
      more = advance();
    }
    const ArgMaxResult res = kernels::ArgMax(exec, block.size(), [&](std::size_t b) {
      return WhitneyLambda(field.Restrict(block[b]), ctx, Execution::kSerial).lambda;
    });
    rep.subsets_examined += block.size();
    if (!have || res.value > best) {
      best = res.value;
      rep.witness = block[res.index];
      have = true;
    }
    if (best >= rep.full) {
      rep.early_exit = more;
      break;
    }
  }
  rep.subset_sup = best;
  if (rep.subset_sup == 0.0) {
    rep.ratio = rep.full == 0.0 ? 1.0 : INFINITY;
  } else {
    rep.ratio = rep.full / rep.subset_sup;
  }
  return rep;
}

}  // namespace ckw
