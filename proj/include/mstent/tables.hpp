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
#ifndef MSTENT_TABLES_HPP
#define MSTENT_TABLES_HPP

#include <array>
#include <string>
#include <vector>

#include "mstent/distributions.hpp"
#include "mstent/mc.hpp"
#include "mstent/quadrature.hpp"
#include "mstent/readings.hpp"
#include "mstent/report.hpp"

namespace mstent {

/// Single-component example: case 1 (d=1), 2 (d=2) or 3 (d=3) with dof v.
SkewTParams example1(int case_id, double v);

/**
 * Mixture example for d in {1, 2, 3} and m in {2, ..., 5}. The d = 1 and
 * d = 2 sets are fully specified. For d = 3 the published location and shape
 * vectors of components 2 to 5 have two entries; the third entry is set to 0.
 */
MixtureParams example2(int d, int m);

struct Table1Row {
  int d;
  double v;
  double shannon;
  std::array<double, 7> renyi;  ///< alpha = 2, 3, 4, 5, 6, 8, 10
  double limit;                 ///< the "alpha -> infinity" column
};
inline constexpr std::array<double, 7> kTable1Alphas{2, 3, 4, 5, 6, 8, 10};

struct Table2Row {
  int d;
  int m;
  double lower, upper, approx, error;
};

struct Table3Row {
  int d;
  int m;
  int alpha;
  double lower, upper, approx, error;
};

const std::vector<Table1Row>& table1();
const std::vector<Table2Row>& table2();
const std::vector<Table3Row>& table3();

struct ReproduceOptions {
  /// Comma-separated key=value filters over d, m, v, alpha; empty keeps all.
  std::string rows;
  double tolerance = 0.02;
  double half_width_tolerance = 0.005;
  FormulaReadings readings = FormulaReadings::tables();
  /// Order used for the "alpha -> infinity" column.
  double limit_alpha = 200.0;
  QuadratureSpec quadrature;
  McOptions mc;  ///< oracle for the property-mode rows
};

struct ReproduceResult {
  std::vector<ReportRow> rows;
  int checked = 0;
  int passed = 0;
};

/// Compares computed values with a published table, one row per cell. Rows
/// with d >= 2 of tables 2 and 3 are property checks (oracle inside bounds).
ReproduceResult reproduce_table(int table, const ReproduceOptions& opt);

}  // namespace mstent

#endif  // MSTENT_TABLES_HPP
