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

#ifndef CKW_FAA_DI_BRUNO_HPP_
#define CKW_FAA_DI_BRUNO_HPP_

#include <span>

#include "ckw/jet.hpp"
#include "ckw/multi_index.hpp"

namespace ckw {

// Derivatives of a composition f o H at x from the jets of f at H(x) and of
// the components h_1..h_q of H at x (H : R^p -> R^q, f : R^q -> R).
//
// The composition jet is built by truncated Taylor arithmetic: each
// h_j(x + u) - h_j(x) is a polynomial in u without constant term, and
//   f(H(x + u)) = sum_{|lambda| <= m} D^lambda f(H(x)) / lambda!
//                 prod_j (h_j(x + u) - h_j(x))^{lambda_j}   (mod deg > m),
// whose u^alpha coefficient times alpha! is D^alpha (f o H)(x). Expanding the
// products reproduces the Faa di Bruno sum over 0 < |lambda| <= |alpha|.
//
// Throws InputError on inconsistent dimensions, insufficient jet orders, or
// when the base point of f's jet is not H(x).
Jet ComposeJets(const Jet& f_at_hx, std::span<const Jet> h_at_x, int order);

double FaaDiBrunoPullback(const Jet& f_at_hx, std::span<const Jet> h_at_x,
                          const MultiIndex& alpha);

}  // namespace ckw

#endif  // CKW_FAA_DI_BRUNO_HPP_
