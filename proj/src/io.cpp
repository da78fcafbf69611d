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

#include "ckw/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ckw/error.hpp"

namespace ckw::io {

namespace {

[[noreturn]] void Fail(const std::string& what) { throw InputError(what); }

const Json& Member(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    Fail(std::string(where) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

double AsDouble(const Json& j, const char* what) {
  if (!j.is_number()) Fail(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) Fail(std::string(what) + " must be finite");
  return v;
}

int AsInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) Fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<double> AsVector(const Json& j, const char* what) {
  if (!j.is_array()) Fail(std::string(what) + " must be an array of numbers");
  std::vector<double> v;
  for (const Json& e : j) v.push_back(AsDouble(e, what));
  return v;
}

}  // namespace

Json ParseJson(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Byte offset of the failure -> line and column.
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << "malformed JSON in " << source << " at line " << line << ", column " << col;
    throw InputError(msg.str());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json LoadJsonArgument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return ParseJson(arg);
  }
  return ParseJson(ReadFile(arg), arg);
}

Modulus ModulusFromJson(const Json& j) {
  const Json& kind_j = Member(j, "kind", "modulus");
  if (!kind_j.is_string()) Fail("modulus: \"kind\" must be a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "linear") return Modulus::Linear();
  if (kind == "power") return Modulus::Power(AsDouble(Member(j, "exponent", "power modulus"), "exponent"));
  if (kind == "capped") {
    return Modulus::Capped(AsDouble(Member(j, "exponent", "capped modulus"), "exponent"),
                           AsDouble(Member(j, "cap", "capped modulus"), "cap"));
  }
  if (kind == "table") {
    const Json& bp = Member(j, "breakpoints", "table modulus");
    if (!bp.is_array()) Fail("table modulus: \"breakpoints\" must be an array");
    std::vector<std::pair<double, double>> pts;
    for (const Json& e : bp) {
      const auto v = AsVector(e, "breakpoint");
      if (v.size() != 2) Fail("table modulus: each breakpoint is [t, omega(t)]");
      pts.emplace_back(v[0], v[1]);
    }
    return Modulus::Table(std::move(pts));
  }
  Fail("modulus: unknown kind \"" + kind + "\" (expected linear, power, capped, table)");
}

Json ModulusToJson(const Modulus& omega) {
  Json j;
  switch (omega.kind()) {
    case Modulus::Kind::kLinear:
      j["kind"] = "linear";
      break;
    case Modulus::Kind::kPower:
      j["kind"] = "power";
      j["exponent"] = omega.exponent();
      break;
    case Modulus::Kind::kCapped:
      j["kind"] = "capped";
      j["exponent"] = omega.exponent();
      j["cap"] = omega.cap();
      break;
    case Modulus::Kind::kTable: {
      j["kind"] = "table";
      Json bp = Json::array();
      for (const auto& [t, w] : omega.breakpoints()) bp.push_back({t, w});
      j["breakpoints"] = bp;
      break;
    }
  }
  return j;
}

WhitneyField FieldFromJson(const Json& j) {
  const int n = AsInt(Member(j, "n", "field"), "n");
  const int k = j.contains("k") ? AsInt(j.at("k"), "k") : 0;
  if (n < 1) Fail("field: n must be >= 1");
  if (k < 0) Fail("field: k must be >= 0");
  const Json& pts = Member(j, "points", "field");
  if (!pts.is_array()) Fail("field: \"points\" must be an array");
  std::vector<Jet> jets;
  for (const Json& p : pts) {
    Point x = AsVector(Member(p, "x", "field point"), "x");
    if (static_cast<int>(x.size()) != n) Fail("field: point dimension differs from n");
    std::vector<double> c;
    if (p.contains("jet")) {
      c = AsVector(p.at("jet"), "jet");
    } else if (k == 0 && p.contains("value")) {
      c = {AsDouble(p.at("value"), "value")};
    } else {
      Fail(k == 0 ? "field point: missing \"jet\" or \"value\"" : "field point: missing \"jet\"");
    }
    if (c.size() != NumMultiIndices(n, k)) {
      Fail("field point: jet needs " + std::to_string(NumMultiIndices(n, k)) + " entries");
    }
    jets.emplace_back(std::move(x), k, std::move(c));
  }
  return WhitneyField(n, k, std::move(jets));
}

Json FieldToJson(const WhitneyField& field) {
  Json j;
  j["n"] = field.dim();
  j["k"] = field.order();
  Json pts = Json::array();
  for (const Jet& jet : field.jets()) {
    Json p;
    p["x"] = jet.base();
    p["jet"] = std::vector<double>(jet.coefficients().begin(), jet.coefficients().end());
    pts.push_back(p);
  }
  j["points"] = pts;
  return j;
}

WhitneyField FieldFromCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Point> points;
  std::vector<double> values;
  std::size_t lineno = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
        row.push_back(v);
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (points.empty() && lineno == 1) continue;  // header
      Fail("CSV line " + std::to_string(lineno) + ": non-numeric cell");
    }
    if (row.size() < 2) Fail("CSV line " + std::to_string(lineno) + ": need x_1..x_n,value");
    if (width == 0) width = row.size();
    if (row.size() != width) Fail("CSV line " + std::to_string(lineno) + ": inconsistent column count");
    values.push_back(row.back());
    row.pop_back();
    points.push_back(std::move(row));
  }
  if (points.empty()) Fail("CSV contains no data rows");
  return WhitneyField::FromValues(std::move(points), values);
}

WhitneyField LoadField(const std::string& arg) {
  if (arg.size() >= 4 && arg.compare(arg.size() - 4, 4, ".csv") == 0) {
    return FieldFromCsv(ReadFile(arg));
  }
  return FieldFromJson(LoadJsonArgument(arg));
}

AtomicFunctional AtomsFromJson(const Json& j, const NormContext& ctx) {
  const Json& list = j.is_object() && j.contains("atoms") ? j.at("atoms") : j;
  if (!list.is_array()) Fail("atoms: expected an array");
  AtomicFunctional g(ctx);
  for (const Json& a : list) {
    const Json& type_j = Member(a, "type", "atom");
    if (!type_j.is_string()) Fail("atom: \"type\" must be a string");
    const std::string type = type_j.get<std::string>();
    Point x = AsVector(Member(a, "x", "atom"), "x");
    std::vector<int> alpha(static_cast<std::size_t>(ctx.n), 0);
    if (a.contains("alpha")) {
      alpha.clear();
      for (const Json& e : a.at("alpha")) alpha.push_back(AsInt(e, "alpha"));
    }
    for (int v : alpha) {
      if (v < 0) Fail("atom: alpha entries must be >= 0");
    }
    const double coef = a.contains("coef") ? AsDouble(a.at("coef"), "coef") : 1.0;
    if (type == "delta") {
      g.Add(DeltaAtom{std::move(x), MultiIndex(alpha)}, coef);
    } else if (type == "diff") {
      Point y = AsVector(Member(a, "y", "difference atom"), "y");
      g.Add(DifferenceAtom{std::move(x), std::move(y), MultiIndex(alpha)}, coef);
    } else {
      Fail("atom: unknown type \"" + type + "\" (expected delta or diff)");
    }
  }
  return g;
}

Json AtomsToJson(const AtomicFunctional& g) {
  Json list = Json::array();
  for (const auto& [atom, c] : g.terms()) {
    Json a;
    if (const auto* d = std::get_if<DeltaAtom>(&atom)) {
      a["type"] = "delta";
      a["x"] = d->x;
      a["alpha"] = std::vector<int>(d->alpha.entries().begin(), d->alpha.entries().end());
    } else {
      const auto& df = std::get<DifferenceAtom>(atom);
      a["type"] = "diff";
      a["x"] = df.x;
      a["y"] = df.y;
      a["alpha"] = std::vector<int>(df.alpha.entries().begin(), df.alpha.entries().end());
    }
    a["coef"] = c;
    list.push_back(a);
  }
  return list;
}

std::vector<Point> PointsFromJson(const Json& j) {
  const Json& list = j.is_object() ? Member(j, "points", "point list") : j;
  if (!list.is_array()) Fail("point list must be an array");
  std::vector<Point> out;
  for (const Json& p : list) {
    out.push_back(p.is_number() ? Point{AsDouble(p, "point")} : AsVector(p, "point"));
  }
  return out;
}

Point PointFromJson(const Json& j) {
  if (j.is_number()) return {AsDouble(j, "point")};
  if (j.is_object()) return AsVector(Member(j, "x", "point"), "point");
  return AsVector(j, "point");
}

Json PointsToJson(const std::vector<Point>& points) {
  Json list = Json::array();
  for (const Point& p : points) list.push_back(p);
  return list;
}

Json Number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace ckw::io
