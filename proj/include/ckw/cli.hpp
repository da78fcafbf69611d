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

#ifndef CKW_CLI_HPP_
#define CKW_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ckw::cli {

inline constexpr const char* kVersion = "ckw 0.1.0";

// Runs one subcommand. Reports go to `out` when --out is "-" (the default),
// diagnostics to `err`. Exit codes: 0 success, 1 input error, 2 numerical error.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ckw::cli

#endif  // CKW_CLI_HPP_
