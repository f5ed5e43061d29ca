// Copyright 2026 The mstent Authors
//
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
#include "mstent/report.hpp"

#include <fmt/format.h>

#include <json.hpp>
#include <stdexcept>

#include "mstent/errors.hpp"

namespace mstent {
namespace {

using nlohmann::json;

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.4f}", x);
}

std::string opt(const std::optional<double>& x) { return x ? num(*x) : ""; }

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell(const ReportRow& r, const std::string& col) {
  if (col == "case") return quote(r.label);
  if (col == "d") return std::to_string(r.d);
  if (col == "m") return std::to_string(r.m);
  if (col == "v") {
    std::string s;
    for (std::size_t i = 0; i < r.dof.size(); ++i) {
      if (i) s += ';';
      s += fmt::format("{:g}", r.dof[i]);
    }
    return s;
  }
  if (col == "alpha") return r.alpha ? fmt::format("{:g}", *r.alpha) : "shannon";
  if (col == "quantity") return quote(r.quantity);
  if (col == "value" || col == "computed") return opt(r.value);
  if (col == "std_error") return opt(r.std_error);
  if (col == "method") return quote(r.method);
  if (col == "n") return r.n ? std::to_string(*r.n) : "";
  if (col == "seed") return r.seed ? std::to_string(*r.seed) : "";
  if (col == "lower") return opt(r.lower);
  if (col == "upper") return opt(r.upper);
  if (col == "approx") return opt(r.approx);
  if (col == "half_width") return opt(r.half_width);
  if (col == "crossed") return r.crossed ? (*r.crossed ? "true" : "false") : "";
  if (col == "oracle") return opt(r.oracle);
  if (col == "oracle_se") return opt(r.oracle_se);
  if (col == "paper_value") return opt(r.reference);
  if (col == "diff") return opt(r.diff);
  if (col == "pass") return r.pass ? (*r.pass ? "pass" : "fail") : "info";
  throw std::invalid_argument("unknown report column '" + col + "'");
}

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

}  // namespace

std::vector<std::string> entropy_columns() {
  return {"case", "d", "m", "v", "alpha", "method", "value", "std_error", "n", "seed"};
}

std::vector<std::string> bounds_columns(bool with_oracle) {
  std::vector<std::string> c{"case", "d", "m", "v", "alpha", "lower", "upper",
                             "approx", "half_width", "crossed"};
  if (with_oracle) {
    c.push_back("oracle");
    c.push_back("oracle_se");
    c.push_back("pass");
  }
  return c;
}

std::vector<std::string> reproduce_columns() {
  return {"case", "d", "m", "v", "alpha", "quantity", "paper_value", "computed", "diff", "pass"};
}

std::string to_csv(const std::vector<ReportRow>& rows, const std::vector<std::string>& columns) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      out += cell(r, columns[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<ReportRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["case"] = r.label;
    j["d"] = r.d;
    j["m"] = r.m;
    j["v"] = r.dof;
    j["alpha"] = r.alpha ? json(*r.alpha) : json("shannon");
    j["quantity"] = r.quantity;
    put(j, "value", r.value);
    put(j, "std_error", r.std_error);
    j["method"] = r.method;
    put(j, "n", r.n);
    put(j, "seed", r.seed);
    put(j, "lower", r.lower);
    put(j, "upper", r.upper);
    put(j, "approx", r.approx);
    put(j, "half_width", r.half_width);
    put(j, "crossed", r.crossed);
    put(j, "oracle", r.oracle);
    put(j, "oracle_se", r.oracle_se);
    put(j, "reference", r.reference);
    put(j, "diff", r.diff);
    put(j, "tolerance", r.tolerance);
    put(j, "pass", r.pass);
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::vector<ReportRow> rows_from_json(const std::string& text) {
  const json arr = json::parse(text);
  if (!arr.is_array()) throw ConfigError("$", "report must be a JSON array");
  std::vector<ReportRow> rows;
  for (const auto& j : arr) {
    ReportRow r;
    r.label = j.at("case").get<std::string>();
    r.d = j.at("d").get<int>();
    r.m = j.at("m").get<int>();
    r.dof = j.at("v").get<std::vector<double>>();
    if (!j.at("alpha").is_string()) r.alpha = j.at("alpha").get<double>();
    r.quantity = j.at("quantity").get<std::string>();
    r.value = get<double>(j, "value");
    r.std_error = get<double>(j, "std_error");
    r.method = j.at("method").get<std::string>();
    r.n = get<std::uint64_t>(j, "n");
    r.seed = get<std::uint64_t>(j, "seed");
    r.lower = get<double>(j, "lower");
    r.upper = get<double>(j, "upper");
    r.approx = get<double>(j, "approx");
    r.half_width = get<double>(j, "half_width");
    r.crossed = get<bool>(j, "crossed");
    r.oracle = get<double>(j, "oracle");
    r.oracle_se = get<double>(j, "oracle_se");
    r.reference = get<double>(j, "reference");
    r.diff = get<double>(j, "diff");
    r.tolerance = get<double>(j, "tolerance");
    r.pass = get<bool>(j, "pass");
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace mstent
