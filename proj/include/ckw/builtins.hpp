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

#ifndef CKW_BUILTINS_HPP_
#define CKW_BUILTINS_HPP_

#include <string>
#include <vector>

#include "ckw/whitney.hpp"

namespace ckw {

// Named test functions on R^n with analytic derivatives (s = x_1 + ... + x_n):
//   zero, one, sin (sin s), cos (cos s), poly (1 + s + s^2/2),
//   gauss (exp(-|x|^2)), bump (prod chi(2 x_i), supported in max|x_i| <= 1),
//   abs_sin (|sin x|, n = 1, values only).
SmoothFunction BuiltinFunction(const std::string& name, int n);
std::vector<std::string> BuiltinFunctionNames();

// Piecewise-linear interpolant of (x_i, f_i) on the line, constant outside the
// table; values only.
SmoothFunction TableFunction1D(std::vector<double> xs, std::vector<double> fs);

}  // namespace ckw

#endif  // CKW_BUILTINS_HPP_
