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

#ifndef CKW_MULTI_INDEX_HPP_
#define CKW_MULTI_INDEX_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ckw {

// alpha = (alpha_1, ..., alpha_n), alpha_i >= 0.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries)
      : MultiIndex(std::vector<int>(entries)) {}
  static MultiIndex Zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex Unit(int n, int i);

  int dim() const { return static_cast<int>(entries_.size()); }
  int order() const { return order_; }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::span<const int> entries() const { return entries_; }

  // alpha! = prod alpha_i!
  double Factorial() const;
  // beta <= alpha componentwise.
  bool Dominates(const MultiIndex& beta) const;
  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;  // requires Dominates
  // prod binom(alpha_i, beta_i)
  double Binomial(const MultiIndex& beta) const;
  // prod z_i^alpha_i
  double Power(std::span<const double> z) const;

  std::string ToString() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int order_ = 0;
};

// All multi-indices of dimension n with order <= k, graded lexicographic:
// by order, then with larger leading entries first, e.g. for n = 2, k = 2:
// (0,0) (1,0) (0,1) (2,0) (1,1) (0,2).
// Jet coefficient vectors and serialized jets use this order.
class MultiIndexSet {
 public:
  MultiIndexSet(int n, int k);

  int dim() const { return n_; }
  int max_order() const { return k_; }
  std::size_t size() const { return indices_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return indices_[i]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  // Position of alpha; throws InputError if alpha has the wrong dimension or
  // order > k.
  std::size_t IndexOf(const MultiIndex& alpha) const;
  // Indices [first, last) of all multi-indices of exactly order m.
  std::pair<std::size_t, std::size_t> OrderRange(int m) const;

 private:
  int n_;
  int k_;
  std::vector<MultiIndex> indices_;
  std::vector<std::size_t> order_start_;
};

// binom(n + k, n): number of multi-indices of dimension n with order <= k.
std::size_t NumMultiIndices(int n, int k);

}  // namespace ckw

#endif  // CKW_MULTI_INDEX_HPP_
