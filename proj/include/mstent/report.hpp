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
#ifndef MSTENT_REPORT_HPP
#define MSTENT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mstent {

/// One output line of the entropy, bounds and reproduce commands.
struct ReportRow {
  std::string label;
  int d = 0;
  int m = 0;
  std::vector<double> dof;
  std::optional<double> alpha;  ///< empty means Shannon
  std::string quantity;         ///< "entropy", "bounds", or a table column name

  std::optional<double> value;
  std::optional<double> std_error;
  std::string method;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> seed;

  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> approx;
  std::optional<double> half_width;
  std::optional<bool> crossed;

  std::optional<double> oracle;
  std::optional<double> oracle_se;

  std::optional<double> reference;
  std::optional<double> diff;
  std::optional<double> tolerance;
  std::optional<bool> pass;

  bool operator==(const ReportRow&) const = default;
};

/// Column sets used by the CLI commands.
std::vector<std::string> entropy_columns();
std::vector<std::string> bounds_columns(bool with_oracle);
std::vector<std::string> reproduce_columns();

/// RFC 4180 style CSV with a header row and 4-decimal numbers. Empty optional
/// fields become empty cells.
std::string to_csv(const std::vector<ReportRow>& rows, const std::vector<std::string>& columns);

/// JSON array of row objects; numbers keep full precision so the rows
/// round-trip exactly.
std::string to_json(const std::vector<ReportRow>& rows);
std::vector<ReportRow> rows_from_json(const std::string& text);

}  // namespace mstent

#endif  // MSTENT_REPORT_HPP
