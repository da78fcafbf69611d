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

#ifndef CKW_IO_HPP_
#define CKW_IO_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "ckw/jet.hpp"
#include "ckw/modulus.hpp"
#include "ckw/predual.hpp"

namespace ckw::io {

using Json = nlohmann::ordered_json;

// Parses JSON text; syntax errors become InputError naming line and column.
Json ParseJson(const std::string& text, const std::string& source = "<inline>");
std::string ReadFile(const std::string& path);
// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
Json LoadJsonArgument(const std::string& arg);

// {"kind":"linear"} | {"kind":"power","exponent":a} |
// {"kind":"capped","exponent":a,"cap":c} | {"kind":"table","breakpoints":[[t,w],...]}
Modulus ModulusFromJson(const Json& j);
Json ModulusToJson(const Modulus& omega);

// {"n":2,"k":1,"points":[{"x":[..],"jet":[..]}, ...]}; for k = 0 a point may
// give "value" instead of "jet". Jet entries follow graded lexicographic order.
WhitneyField FieldFromJson(const Json& j);
Json FieldToJson(const WhitneyField& field);

// k = 0 data as CSV rows x_1,...,x_n,value; a non-numeric first row is a header.
WhitneyField FieldFromCsv(const std::string& text);
// Dispatches on the extension (.csv) of a path, otherwise JSON.
WhitneyField LoadField(const std::string& arg);

// [{"type":"delta"|"diff","x":[..],"y":[..],"alpha":[..],"coef":c}, ...]
AtomicFunctional AtomsFromJson(const Json& j, const NormContext& ctx);
Json AtomsToJson(const AtomicFunctional& g);

// A list of points: [[..], ...] or {"points":[[..], ...]}.
std::vector<Point> PointsFromJson(const Json& j);
Point PointFromJson(const Json& j);
Json PointsToJson(const std::vector<Point>& points);

// Doubles with non-finite values mapped to null.
Json Number(double v);

}  // namespace ckw::io

#endif  // CKW_IO_HPP_
