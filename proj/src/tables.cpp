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
#include "mstent/tables.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "mstent/bounds.hpp"
#include "mstent/entropy.hpp"
#include "mstent/errors.hpp"

namespace mstent {
namespace {

SkewTParams make(std::initializer_list<double> mu, std::initializer_list<double> scale,
                 std::initializer_list<double> delta, double v) {
  const auto d = static_cast<Eigen::Index>(mu.size());
  Vector m(d), dl(d);
  Matrix s(d, d);
  Eigen::Index i = 0;
  for (double x : mu) m[i++] = x;
  i = 0;
  for (double x : delta) dl[i++] = x;
  i = 0;
  for (double x : scale) {
    s(i / d, i % d) = x;
    ++i;
  }
  return SkewTParams(m, SpdMatrix(s), dl, v);
}

std::vector<SkewTParams> example2_components(int d) {
  switch (d) {
    case 1:
      return {make({0.3}, {1.5}, {0.3}, 3), make({4}, {5}, {4}, 3),
              make({0.6}, {3}, {2.2}, 4), make({3}, {2}, {1}, 4), make({2}, {5}, {2.1}, 5)};
    case 2:
      return {make({3, 2}, {0.7, 0.3, 0.3, 3}, {0.16, 0.59}, 3),
              make({1, 5}, {0.12, 0.13, 0.13, 3}, {2.3, 3.1}, 3),
              make({3, 1}, {0.18, 0.6, 0.6, 4}, {2.6, 1}, 4),
              make({1, 1}, {1, 0, 0, 1}, {0.6, 1}, 4),
              make({1, 0.3}, {1, 0, 0, 1}, {1, 1}, 5)};
    case 3: {
      const std::initializer_list<double> eye{1, 0, 0, 0, 1, 0, 0, 0, 1};
      return {make({3, 2, 0}, {0.7, 0.3, 0.5, 0.3, 3, 0.3, 0.5, 0.3, 1}, {0.16, 0.59, 0.1}, 3),
              make({1, 5, 0}, {5, 0.3, 2, 0.3, 5, 1, 2, 1, 3}, {2.3, 3.1, 0}, 3),
              make({2, 3, 0}, eye, {2, 1, 0}, 4), make({1, 1, 0}, eye, {1, 2, 0}, 4),
              make({0.1, 1, 0}, eye, {2, 1, 0}, 5)};
    }
  }
  throw DomainError("example 2 exists for d = 1, 2, 3 only");
}

std::vector<double> example2_weights(int m) {
  switch (m) {
    case 2: return {0.2, 0.8};
    case 3: return {0.2, 0.3, 0.5};
    case 4: return {0.1, 0.2, 0.2, 0.5};
    case 5: return {0.2, 0.2, 0.2, 0.2, 0.2};
  }
  throw DomainError("example 2 exists for m = 2..5 only");
}

// Parsed --rows filter.
class RowFilter {
 public:
  explicit RowFilter(const std::string& spec) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw DomainError("row filter '" + item + "' is not key=value");
      const std::string key = item.substr(0, eq);
      if (key != "d" && key != "m" && key != "v" && key != "alpha") {
        throw DomainError("unknown row filter key '" + key + "' (expected d, m, v or alpha)");
      }
      try {
        want_[key] = std::stod(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw DomainError("row filter '" + item + "' needs a numeric value");
      }
    }
  }

  bool keep(int d, std::optional<int> m, std::optional<double> v,
            std::optional<double> alpha) const {
    for (const auto& [key, val] : want_) {
      if (key == "d" && d != val) return false;
      if (key == "m" && m && *m != val) return false;
      if (key == "v" && v && *v != val) return false;
      if (key == "alpha" && (!alpha || *alpha != val)) return false;
    }
    return true;
  }

 private:
  std::map<std::string, double> want_;
};

std::vector<double> dofs(const MixtureParams& m) {
  std::vector<double> v;
  for (const auto& c : m.components) v.push_back(c.dof);
  return v;
}

void compare(ReproduceResult& res, ReportRow row, double computed, double reference,
             double tol, bool checked) {
  row.value = computed;
  row.reference = reference;
  row.diff = std::fabs(computed - reference);
  if (checked) {
    row.tolerance = tol;
    row.pass = *row.diff <= tol;
    ++res.checked;
    if (*row.pass) ++res.passed;
  }
  res.rows.push_back(std::move(row));
}

void sandwich(ReproduceResult& res, ReportRow row, const BoundsReport& b, const Estimate& o) {
  row.quantity = "sandwich";
  row.lower = b.lower;
  row.upper = b.upper;
  row.approx = b.approx;
  row.half_width = b.half_width;
  row.crossed = b.crossed;
  row.value = o.value;
  row.oracle = o.value;
  row.oracle_se = o.std_error;
  row.pass = !b.crossed && o.value >= b.lower - 3 * o.std_error &&
             o.value <= b.upper + 3 * o.std_error;
  ++res.checked;
  if (*row.pass) ++res.passed;
  res.rows.push_back(std::move(row));
}

void reproduce1(const ReproduceOptions& opt, const RowFilter& f, ReproduceResult& res) {
  for (const auto& t : table1()) {
    const SkewTParams p = example1(t.d, t.v);
    const bool checked = t.d == 1;
    ReportRow base;
    base.label = "example1_case" + std::to_string(t.d);
    base.d = t.d;
    base.m = 1;
    base.dof = {t.v};
    base.method = "quadrature";
    if (f.keep(t.d, 1, t.v, std::nullopt)) {
      ReportRow r = base;
      r.quantity = "shannon";
      compare(res, r, skewt_shannon(p, opt.quadrature, opt.readings), t.shannon,
              opt.tolerance, checked);
    }
    for (std::size_t j = 0; j < kTable1Alphas.size(); ++j) {
      if (!f.keep(t.d, 1, t.v, kTable1Alphas[j])) continue;
      ReportRow r = base;
      r.quantity = "renyi";
      r.alpha = kTable1Alphas[j];
      compare(res, r, skewt_renyi(p, kTable1Alphas[j], opt.quadrature, opt.readings),
              t.renyi[j], opt.tolerance, checked);
    }
    if (f.keep(t.d, 1, t.v, opt.limit_alpha)) {
      ReportRow r = base;
      r.quantity = "renyi_limit";
      r.alpha = opt.limit_alpha;
      compare(res, r, skewt_renyi(p, opt.limit_alpha, opt.quadrature, opt.readings), t.limit,
              opt.tolerance, checked);
    }
  }
}

void reproduce2(const ReproduceOptions& opt, const RowFilter& f, ReproduceResult& res) {
  for (const auto& t : table2()) {
    if (!f.keep(t.d, t.m, std::nullopt, std::nullopt)) continue;
    const MixtureParams mix = example2(t.d, t.m);
    const BoundsReport b = shannon_bounds(mix, opt.quadrature, opt.readings);
    ReportRow base;
    base.label = "example2_case" + std::to_string(t.d) + "_m" + std::to_string(t.m);
    base.d = t.d;
    base.m = t.m;
    base.dof = dofs(mix);
    base.method = "bounds";
    if (t.d == 1) {
      const std::pair<const char*, std::pair<double, double>> cells[] = {
          {"lower", {b.lower, t.lower}},
          {"upper", {b.upper, t.upper}},
          {"approx", {b.approx, t.approx}},
          {"half_width", {b.half_width, t.error}}};
      for (const auto& [name, vals] : cells) {
        ReportRow r = base;
        r.quantity = name;
        compare(res, r, vals.first, vals.second, opt.tolerance, true);
      }
    } else {
      const Estimate o = mc_shannon(mixture_law(mix), opt.mc);
      sandwich(res, base, b, o);
    }
  }
}

void reproduce3(const ReproduceOptions& opt, const RowFilter& f, ReproduceResult& res) {
  std::map<std::pair<int, int>, EntropyProfile> oracle;
  for (const auto& t : table3()) {
    if (!f.keep(t.d, t.m, std::nullopt, t.alpha)) continue;
    const MixtureParams mix = example2(t.d, t.m);
    const BoundsReport b = renyi_bounds(mix, t.alpha, opt.quadrature, opt.readings);
    ReportRow base;
    base.label = "example2_case" + std::to_string(t.d) + "_m" + std::to_string(t.m);
    base.d = t.d;
    base.m = t.m;
    base.dof = dofs(mix);
    base.alpha = t.alpha;
    base.method = "bounds";
    if (t.d == 1) {
      const std::tuple<const char*, double, double, double> cells[] = {
          {"lower", b.lower, t.lower, opt.tolerance},
          {"upper", b.upper, t.upper, opt.tolerance},
          {"approx", b.approx, t.approx, opt.tolerance},
          {"half_width", b.half_width, t.error, opt.half_width_tolerance}};
      for (const auto& [name, computed, reference, tol] : cells) {
        ReportRow r = base;
        r.quantity = name;
        compare(res, r, computed, reference, tol, true);
      }
    } else {
      const auto key = std::make_pair(t.d, t.m);
      if (!oracle.count(key)) {
        std::vector<double> alphas;
        for (const auto& u : table3()) {
          if (u.d == t.d && u.m == t.m) alphas.push_back(u.alpha);
        }
        oracle.emplace(key, mc_profile(mixture_law(mix), alphas, opt.mc));
      }
      const EntropyProfile& prof = oracle.at(key);
      for (std::size_t j = 0; j < prof.alphas.size(); ++j) {
        if (prof.alphas[j] == t.alpha) sandwich(res, base, b, prof.renyi[j]);
      }
    }
  }
}

}  // namespace

SkewTParams example1(int case_id, double v) {
  switch (case_id) {
    case 1: return make({0.3}, {1.5}, {0.3}, v);
    case 2: return make({3, 2}, {0.7, 0.3, 0.3, 3}, {0.3, 2}, v);
    case 3: return make({0, 0, 0}, {1, 0, 0, 0, 1, 0, 0, 0, 1}, {0.3, 2, 0.3}, v);
  }
  throw DomainError("example 1 has cases 1, 2 and 3");
}

MixtureParams example2(int d, int m) {
  auto comps = example2_components(d);
  auto w = example2_weights(m);
  return MixtureParams(std::vector<SkewTParams>(comps.begin(), comps.begin() + m), w);
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows{
      {1, 3, 1.9590, {1.6571, 1.5380, 1.4788, 1.4352, 1.4053, 1.3638, 1.3371}, 1.2311},
      {1, 4, 1.8678, {1.6033, 1.5010, 1.4438, 1.4043, 1.3749, 1.3378, 1.3127}, 1.2101},
      {1, 5, 1.8130, {1.5750, 1.4806, 1.4214, 1.3839, 1.3573, 1.3199, 1.2958}, 1.1970},
      {1, 6, 1.7767, {1.5538, 1.4624, 1.4089, 1.3708, 1.3462, 1.3086, 1.2860}, 1.1972},
      {1, 8, 1.7314, {1.5361, 1.4459, 1.3951, 1.3557, 1.3310, 1.2933, 1.2726}, 1.1970},
      {1, 10, 1.7025, {1.5140, 1.4261, 1.3795, 1.3451, 1.3154, 1.2896, 1.2624}, 1.1887},
      {1, 12, 1.6871, {1.4999, 1.4223, 1.3688, 1.3374, 1.3132, 1.2780, 1.2585}, 1.1746},
      {2, 3, 3.5238, {2.9363, 2.6728, 2.5441, 2.4486, 2.3939, 2.3081, 2.2532}, 2.0756},
      {2, 4, 3.3404, {2.8648, 2.6401, 2.5096, 2.4300, 2.3754, 2.2902, 2.2403}, 2.0679},
      {2, 5, 3.2363, {2.8158, 2.5956, 2.4832, 2.4069, 2.3548, 2.2781, 2.2304}, 2.0521},
      {2, 6, 3.1763, {2.7936, 2.5964, 2.4727, 2.4012, 2.3468, 2.2670, 2.2183}, 2.0625},
      {2, 8, 3.0826, {2.7565, 2.5621, 2.4494, 2.3849, 2.3273, 2.2570, 2.2109}, 2.0561},
      {2, 10, 3.0367, {2.7228, 2.5526, 2.4386, 2.3702, 2.3263, 2.2508, 2.2128}, 2.0541},
      {2, 12, 3.0056, {2.7069, 2.5472, 2.4348, 2.3709, 2.3164, 2.2466, 2.1993}, 2.0539},
      {3, 3, 4.6973, {3.6934, 3.2816, 3.0665, 2.9312, 2.8325, 2.7018, 2.6177}, 2.3562},
      {3, 4, 4.4806, {3.6356, 3.2594, 3.0701, 2.9340, 2.8508, 2.7266, 2.6461}, 2.3886},
      {3, 5, 4.3250, {3.5950, 3.2465, 3.0629, 2.9416, 2.8526, 2.7345, 2.6568}, 2.4839},
      {3, 6, 4.2433, {3.5636, 3.2349, 3.0662, 2.9399, 2.8624, 2.7452, 2.6711}, 2.4982},
      {3, 8, 4.1010, {3.5157, 3.2376, 3.0577, 2.9473, 2.8719, 2.7564, 2.6875}, 2.5103},
      {3, 10, 4.0454, {3.5004, 3.2102, 3.0534, 2.9437, 2.8705, 2.7626, 2.6845}, 2.5271},
      {3, 12, 3.9951, {3.4695, 3.2069, 3.0517, 2.9414, 2.8697, 2.7597, 2.6840}, 2.5259},
  };
  return rows;
}

const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows{
      {1, 2, 2.0984, 2.5555, 2.3283, 0.2262}, {1, 3, 1.9818, 2.3523, 2.1671, 0.1852},
      {1, 4, 1.9398, 2.2569, 2.0983, 0.1585}, {1, 5, 1.9471, 2.2569, 2.1020, 0.1549},
      {2, 2, 2.6149, 3.6332, 3.1240, 0.5091}, {2, 3, 2.5553, 3.5219, 3.0386, 0.4833},
      {2, 4, 2.7972, 3.6936, 3.2454, 0.4482}, {2, 5, 2.8443, 3.7310, 3.2876, 0.4433},
      {3, 2, 6.3749, 7.4959, 6.9354, 0.5605}, {3, 3, 5.2607, 6.6252, 5.9429, 0.6822},
      {3, 4, 4.9670, 6.2674, 5.6172, 0.6502}, {3, 5, 5.0167, 6.3223, 5.6695, 0.6528},
  };
  return rows;
}

const std::vector<Table3Row>& table3() {
  static const std::vector<Table3Row> rows{
      {1, 2, 2, 1.8936, 1.9287, 1.9112, 0.0176},  {1, 2, 3, 1.7668, 1.8306, 1.7987, 0.0319},
      {1, 2, 4, 1.7092, 1.7727, 1.7410, 0.0317},  {1, 2, 5, 1.6620, 1.7263, 1.6942, 0.0321},
      {1, 2, 10, 1.5659, 1.6301, 1.5980, 0.0321}, {1, 2, 15, 1.5269, 1.5943, 1.5606, 0.0337},
      {1, 2, 20, 1.5032, 1.5687, 1.5359, 0.0327}, {1, 2, 30, 1.4784, 1.5438, 1.5111, 0.0327},
      {1, 3, 2, 1.7719, 1.7775, 1.7747, 0.0028},  {1, 3, 3, 1.6339, 1.6668, 1.6504, 0.0164},
      {1, 3, 4, 1.5739, 1.6053, 1.5896, 0.0157},  {1, 3, 5, 1.5285, 1.5637, 1.5461, 0.0176},
      {1, 3, 10, 1.4372, 1.4698, 1.4535, 0.0163}, {1, 3, 15, 1.4001, 1.4309, 1.4155, 0.0154},
      {1, 3, 20, 1.3815, 1.4115, 1.3965, 0.0150}, {1, 3, 30, 1.3768, 1.4066, 1.3918, 0.0148},
      {1, 4, 2, 1.7063, 1.7259, 1.7161, 0.0098},  {1, 4, 3, 1.5721, 1.6173, 1.5947, 0.0226},
      {1, 4, 4, 1.5012, 1.5569, 1.5291, 0.0278},  {1, 4, 5, 1.4687, 1.5166, 1.4927, 0.0239},
      {1, 4, 10, 1.3676, 1.4231, 1.3954, 0.0278}, {1, 4, 15, 1.2968, 1.3577, 1.3273, 0.0304},
      {1, 4, 20, 1.2614, 1.3250, 1.2933, 0.0317}, {1, 4, 30, 1.2526, 1.3168, 1.2848, 0.0320},
      {2, 2, 2, 1.7185, 1.9222, 1.8204, 0.1018},  {2, 2, 3, 1.4530, 1.6230, 1.5380, 0.0850},
      {2, 2, 4, 1.2991, 1.4887, 1.3939, 0.0948},  {2, 2, 5, 1.2147, 1.4105, 1.3126, 0.0979},
      {2, 2, 10, 1.0119, 1.1883, 1.1001, 0.0882}, {2, 2, 15, 0.9275, 1.1037, 1.0156, 0.0881},
      {2, 2, 20, 0.8836, 1.0517, 0.9676, 0.0840}, {2, 2, 30, 0.8327, 1.0034, 0.9180, 0.0854},
      {2, 3, 2, 1.6939, 1.8950, 1.7945, 0.1005},  {2, 3, 3, 1.4300, 1.6355, 1.5327, 0.1028},
      {2, 3, 4, 1.3101, 1.4966, 1.4033, 0.0932},  {2, 3, 5, 1.2127, 1.3976, 1.3051, 0.0925},
      {2, 3, 10, 1.0111, 1.1857, 1.0984, 0.0873}, {2, 3, 15, 0.9282, 1.1005, 1.0143, 0.0862},
      {2, 3, 20, 0.8849, 1.0536, 0.9692, 0.0843}, {2, 3, 30, 0.8337, 1.0019, 0.9178, 0.0841},
      {2, 4, 2, 2.1855, 2.2517, 2.2186, 0.0331},  {2, 4, 3, 1.9369, 2.0710, 2.0040, 0.0671},
      {2, 4, 4, 1.7970, 1.9845, 1.8908, 0.0937},  {2, 4, 5, 1.7047, 1.9253, 1.8150, 0.1103},
      {2, 4, 10, 1.6216, 1.8720, 1.7468, 0.1252}, {2, 4, 15, 1.5634, 1.8347, 1.6991, 0.1356},
      {2, 4, 20, 1.5343, 1.8160, 1.6753, 0.1407}, {2, 4, 30, 1.5270, 1.8113, 1.6694, 0.1419},
      {3, 2, 2, 5.2280, 5.5015, 5.3647, 0.1367},  {3, 2, 3, 4.7988, 5.1659, 4.9823, 0.1835},
      {3, 2, 4, 4.5649, 4.9848, 4.7749, 0.2100},  {3, 2, 5, 4.4164, 4.8589, 4.6377, 0.2212},
      {3, 2, 10, 4.0815, 4.5706, 4.3260, 0.2445}, {3, 2, 15, 3.9489, 4.4481, 4.1985, 0.2496},
      {3, 2, 20, 3.8771, 4.3877, 4.1324, 0.2553}, {3, 2, 30, 3.8592, 4.3726, 4.1159, 0.2567},
      {3, 3, 2, 3.8026, 4.1182, 3.9604, 0.1578},  {3, 3, 3, 3.2605, 3.7012, 3.4809, 0.2203},
      {3, 3, 4, 3.0183, 3.4761, 3.2472, 0.2289},  {3, 3, 5, 2.8843, 3.3352, 3.1098, 0.2254},
      {3, 3, 10, 2.5761, 3.0129, 2.7945, 0.2184}, {3, 3, 15, 2.4634, 2.8866, 2.6750, 0.2116},
      {3, 3, 20, 2.4070, 2.8235, 2.6152, 0.2082}, {3, 3, 30, 2.3929, 2.8077, 2.6003, 0.2074},
      {3, 4, 2, 3.6630, 3.9208, 3.7919, 0.1289},  {3, 4, 3, 3.2517, 3.5226, 3.3872, 0.1355},
      {3, 4, 4, 3.0487, 3.3094, 3.1790, 0.1304},  {3, 4, 5, 2.9208, 3.1719, 3.0464, 0.1255},
      {3, 4, 10, 2.6246, 2.8607, 2.7426, 0.1180}, {3, 4, 15, 2.4173, 2.6429, 2.5299, 0.1130},
      {3, 4, 20, 2.3136, 2.5340, 2.4236, 0.1104}, {3, 4, 30, 2.2877, 2.5068, 2.3970, 0.1098},
  };
  return rows;
}

ReproduceResult reproduce_table(int table, const ReproduceOptions& opt) {
  const RowFilter f(opt.rows);
  ReproduceResult res;
  switch (table) {
    case 1: reproduce1(opt, f, res); break;
    case 2: reproduce2(opt, f, res); break;
    case 3: reproduce3(opt, f, res); break;
    default: throw DomainError("unknown table id " + std::to_string(table) + " (expected 1, 2 or 3)");
  }
  return res;
}

}  // namespace mstent
