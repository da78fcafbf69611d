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

#include "ckw/multi_index.hpp"

#include <algorithm>
#include <sstream>

#include "ckw/error.hpp"

namespace ckw {

namespace {

double Factorial(int m) {
  double r = 1.0;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

double Choose(int a, int b) {
  if (b < 0 || b > a) return 0.0;
  b = std::min(b, a - b);
  double r = 1.0;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// Appends all multi-indices of dimension n and exact order m, larger leading
// entries first.
void AppendOrder(int n, int m, std::vector<int>& prefix, std::vector<MultiIndex>& out) {
  const int pos = static_cast<int>(prefix.size());
  if (pos == n - 1) {
    prefix.push_back(m);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int a = m; a >= 0; --a) {
    prefix.push_back(a);
    AppendOrder(n, m - a, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("multi-index needs dimension >= 1");
  for (int a : entries_) {
    if (a < 0) throw InputError("multi-index entries must be nonnegative");
    order_ += a;
  }
}

MultiIndex MultiIndex::Unit(int n, int i) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return MultiIndex(std::move(e));
}

double MultiIndex::Factorial() const {
  double r = 1.0;
  for (int a : entries_) r *= ckw::Factorial(a);
  return r;
}

bool MultiIndex::Dominates(const MultiIndex& beta) const {
  if (beta.dim() != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (beta[i] > (*this)[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.dim() != dim()) throw InputError("multi-index dimension mismatch");
  std::vector<int> e(entries_);
  for (int i = 0; i < dim(); ++i) e[static_cast<std::size_t>(i)] += other[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!Dominates(other)) throw InputError("multi-index difference would be negative");
  std::vector<int> e(entries_);
  for (int i = 0; i < dim(); ++i) e[static_cast<std::size_t>(i)] -= other[i];
  return MultiIndex(std::move(e));
}

double MultiIndex::Binomial(const MultiIndex& beta) const {
  double r = 1.0;
  for (int i = 0; i < dim(); ++i) r *= Choose((*this)[i], beta[i]);
  return r;
}

double MultiIndex::Power(std::span<const double> z) const {
  double r = 1.0;
  for (int i = 0; i < dim(); ++i) {
    for (int p = 0; p < (*this)[i]; ++p) r *= z[static_cast<std::size_t>(i)];
  }
  return r;
}

std::string MultiIndex::ToString() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < dim(); ++i) out << (i ? "," : "") << (*this)[i];
  out << ')';
  return out.str();
}

MultiIndexSet::MultiIndexSet(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw InputError("dimension n must be >= 1");
  if (k < 0) throw InputError("order k must be >= 0");
  std::vector<int> prefix;
  for (int m = 0; m <= k; ++m) {
    order_start_.push_back(indices_.size());
    AppendOrder(n, m, prefix, indices_);
  }
  order_start_.push_back(indices_.size());
}

std::size_t MultiIndexSet::IndexOf(const MultiIndex& alpha) const {
  if (alpha.dim() != n_) throw InputError("multi-index " + alpha.ToString() + " has wrong dimension");
  if (alpha.order() > k_) {
    throw InputError("multi-index " + alpha.ToString() + " exceeds order " + std::to_string(k_));
  }
  const auto first = indices_.begin() + static_cast<std::ptrdiff_t>(order_start_[static_cast<std::size_t>(alpha.order())]);
  const auto last = indices_.begin() + static_cast<std::ptrdiff_t>(order_start_[static_cast<std::size_t>(alpha.order()) + 1]);
  // Within one order entries are sorted descending.
  auto it = std::lower_bound(first, last, alpha,
                             [](const MultiIndex& a, const MultiIndex& b) { return a > b; });
  return static_cast<std::size_t>(it - indices_.begin());
}

std::pair<std::size_t, std::size_t> MultiIndexSet::OrderRange(int m) const {
  if (m < 0 || m > k_) return {0, 0};
  return {order_start_[static_cast<std::size_t>(m)], order_start_[static_cast<std::size_t>(m) + 1]};
}

std::size_t NumMultiIndices(int n, int k) {
  return static_cast<std::size_t>(Choose(n + k, n) + 0.5);
}

}  // namespace ckw
