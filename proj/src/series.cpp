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

#include "ckw/series.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "ckw/error.hpp"

namespace ckw {

Series Series::Constant(int order, double c) {
  Series s(order);
  s[0] = c;
  return s;
}

Series Series::Variable(int order, double x0) {
  Series s(order);
  s[0] = x0;
  if (order >= 1) s[1] = 1.0;
  return s;
}

double Series::Derivative(int j) const {
  double f = 1.0;
  for (int i = 2; i <= j; ++i) f *= i;
  return f * (*this)[j];
}

Series Series::operator+(const Series& o) const {
  Series r(*this);
  for (int j = 0; j <= order(); ++j) r[j] += o[j];
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r(*this);
  for (int j = 0; j <= order(); ++j) r[j] -= o[j];
  return r;
}

Series Series::operator*(const Series& o) const {
  Series r(order());
  for (int i = 0; i <= order(); ++i) {
    if ((*this)[i] == 0.0) continue;
    for (int j = 0; i + j <= order(); ++j) r[i + j] += (*this)[i] * o[j];
  }
  return r;
}

Series Series::operator*(double s) const {
  Series r(*this);
  for (int j = 0; j <= order(); ++j) r[j] *= s;
  return r;
}

Series Series::operator/(const Series& o) const { return (*this) * Reciprocal(o); }

Series Reciprocal(const Series& s) {
  if (s[0] == 0.0) throw NumericalError("series reciprocal of a series with zero constant term");
  Series r(s.order());
  r[0] = 1.0 / s[0];
  for (int j = 1; j <= s.order(); ++j) {
    double acc = 0.0;
    for (int i = 1; i <= j; ++i) acc += s[i] * r[j - i];
    r[j] = -acc / s[0];
  }
  return r;
}

Series Exp(const Series& s) {
  // r' = s' r
  Series r(s.order());
  r[0] = std::exp(s[0]);
  for (int j = 1; j <= s.order(); ++j) {
    double acc = 0.0;
    for (int i = 1; i <= j; ++i) acc += i * s[i] * r[j - i];
    r[j] = acc / j;
  }
  return r;
}

namespace {

struct PolyTables {
  std::shared_ptr<const MultiIndexSet> basis;
  std::shared_ptr<const std::vector<std::vector<std::ptrdiff_t>>> product;
};

// product[i][j] = index of basis[i] + basis[j], or -1 if beyond degree.
PolyTables GetTables(int n, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PolyTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, m});
  if (it != cache.end()) return it->second;
  auto basis = std::make_shared<const MultiIndexSet>(n, m);
  auto product = std::make_shared<std::vector<std::vector<std::ptrdiff_t>>>(
      basis->size(), std::vector<std::ptrdiff_t>(basis->size(), -1));
  for (std::size_t i = 0; i < basis->size(); ++i) {
    for (std::size_t j = 0; j < basis->size(); ++j) {
      if ((*basis)[i].order() + (*basis)[j].order() > m) continue;
      (*product)[i][j] = static_cast<std::ptrdiff_t>(basis->IndexOf((*basis)[i] + (*basis)[j]));
    }
  }
  PolyTables t{basis, product};
  cache.emplace(std::make_pair(n, m), t);
  return t;
}

}  // namespace

TruncatedPoly::TruncatedPoly(int n, int m) {
  auto t = GetTables(n, m);
  basis_ = t.basis;
  product_index_ = t.product;
  c_.assign(basis_->size(), 0.0);
}

TruncatedPoly TruncatedPoly::Constant(int n, int m, double c) {
  TruncatedPoly p(n, m);
  p[0] = c;
  return p;
}

TruncatedPoly TruncatedPoly::operator+(const TruncatedPoly& o) const {
  TruncatedPoly r(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& o) const {
  TruncatedPoly r(dim(), degree());
  const auto& prod = *product_index_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0.0) continue;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      const std::ptrdiff_t t = prod[i][j];
      if (t >= 0) r.c_[static_cast<std::size_t>(t)] += c_[i] * o.c_[j];
    }
  }
  return r;
}

TruncatedPoly TruncatedPoly::operator*(double s) const {
  TruncatedPoly r(*this);
  for (double& v : r.c_) v *= s;
  return r;
}

}  // namespace ckw
