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

#ifndef CKW_ERROR_HPP_
#define CKW_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ckw {

// Bad caller input: malformed data, violated preconditions, duplicate points.
// The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the domain of a mathematical function (e.g. omega(t), t <= 0).
class DomainError : public InputError {
 public:
  explicit DomainError(const std::string& what) : InputError(what) {}
};

// Requested an operation the library does not provide for this input
// (e.g. an exact predual norm for k >= 1).
class UnsupportedError : public InputError {
 public:
  explicit UnsupportedError(const std::string& what) : InputError(what) {}
};

// Combinatorial or dense-size guard tripped.
class SizeError : public InputError {
 public:
  explicit SizeError(const std::string& what) : InputError(what) {}
};

// Numerical breakdown: NaN/inf values, quadrature that fails to converge,
// LP pivoting breakdown. The CLI maps this to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ckw

#endif  // CKW_ERROR_HPP_
