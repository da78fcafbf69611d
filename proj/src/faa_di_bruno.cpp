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

#include "ckw/faa_di_bruno.hpp"

#include <cmath>
#include <vector>

#include "ckw/error.hpp"
#include "ckw/series.hpp"

namespace ckw {

Jet ComposeJets(const Jet& f_at_hx, std::span<const Jet> h_at_x, int order) {
  const int q = f_at_hx.dim();
  if (static_cast<int>(h_at_x.size()) != q) {
    throw InputError("number of component jets must equal the dimension of f's jet");
  }
  if (h_at_x.empty()) throw InputError("need at least one component jet");
  const int p = h_at_x.front().dim();
  if (order < 0) throw InputError("composition order must be >= 0");
  if (f_at_hx.order() < order) throw InputError("f's jet order is below the requested order");
  for (int j = 0; j < q; ++j) {
    const Jet& h = h_at_x[static_cast<std::size_t>(j)];
    if (h.dim() != p) throw InputError("component jets have inconsistent dimension");
    if (h.base() != h_at_x.front().base()) throw InputError("component jets have different base points");
    if (h.order() < order) throw InputError("component jet order is below the requested order");
    const double hx = h[0];
    const double fb = f_at_hx.base()[static_cast<std::size_t>(j)];
    if (std::abs(hx - fb) > 1e-9 * (1.0 + std::abs(hx))) {
      throw InputError("f's jet is not based at H(x)");
    }
  }

  // Increments h_j(x + u) - h_j(x) as polynomials in u.
  std::vector<TruncatedPoly> increments;
  increments.reserve(static_cast<std::size_t>(q));
  for (const Jet& h : h_at_x) {
    TruncatedPoly inc(p, order);
    const MultiIndexSet& hs = h.indices();
    for (std::size_t i = 0; i < inc.basis().size(); ++i) {
      const MultiIndex& beta = inc.basis()[i];
      if (beta.order() == 0) continue;
      inc[i] = h[hs.IndexOf(beta)] / beta.Factorial();
    }
    increments.push_back(std::move(inc));
  }
  // powers[j][e] = increment_j^e
  std::vector<std::vector<TruncatedPoly>> powers(static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j) {
    auto& pw = powers[static_cast<std::size_t>(j)];
    pw.push_back(TruncatedPoly::Constant(p, order, 1.0));
    for (int e = 1; e <= order; ++e) pw.push_back(pw.back() * increments[static_cast<std::size_t>(j)]);
  }

  TruncatedPoly result(p, order);
  const MultiIndexSet& fs = f_at_hx.indices();
  for (std::size_t li = 0; li < fs.size(); ++li) {
    const MultiIndex& lambda = fs[li];
    if (lambda.order() > order) break;
    const double coef = f_at_hx[li] / lambda.Factorial();
    if (coef == 0.0) continue;
    TruncatedPoly term = TruncatedPoly::Constant(p, order, coef);
    for (int j = 0; j < q; ++j) {
      if (lambda[j] > 0) term = term * powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(lambda[j])];
    }
    result = result + term;
  }

  std::vector<double> c(result.basis().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = result[i] * result.basis()[i].Factorial();
  return Jet(h_at_x.front().base(), order, std::move(c));
}

double FaaDiBrunoPullback(const Jet& f_at_hx, std::span<const Jet> h_at_x, const MultiIndex& alpha) {
  if (h_at_x.empty()) throw InputError("need at least one component jet");
  if (alpha.dim() != h_at_x.front().dim()) throw InputError("multi-index dimension does not match H's domain");
  const Jet composed = ComposeJets(f_at_hx, h_at_x, alpha.order());
  return composed.Coefficient(alpha);
}

}  // namespace ckw
