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
// Command-line front end: entropy | bounds | reproduce.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mstent/bounds.hpp"
#include "mstent/config.hpp"
#include "mstent/entropy.hpp"
#include "mstent/errors.hpp"
#include "mstent/mc.hpp"
#include "mstent/report.hpp"
#include "mstent/tables.hpp"

namespace {

using namespace mstent;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitReproduction = 2;

struct Common {
  std::string out = "csv";
  std::string output;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  unsigned threads = 0;
  std::string readings;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_readings) {
  c.readings = default_readings;
  cmd->add_option("--out", c.out, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", c.output, "Write to this file instead of standard output");
  cmd->add_option("--seed", c.seed, "Monte Carlo seed (default 20240601)");
  cmd->add_option("--samples", c.samples, "Monte Carlo sample count (default 1e6)");
  cmd->add_option("--threads", c.threads, "Worker threads, 0 = auto; results do not depend on it")
      ->capture_default_str();
  cmd->add_option("--readings", c.readings,
                  "Formula readings: exact (oracle-consistent) or tables (as used for the "
                  "published tables)")
      ->check(CLI::IsMember({"exact", "tables"}))
      ->capture_default_str();
}

McOptions mc_options(const Common& c, const ModelConfig* cfg) {
  McOptions o;
  o.seed = c.seed ? *c.seed : (cfg && cfg->seed ? *cfg->seed : kDefaultSeed);
  o.n = c.samples ? *c.samples : (cfg && cfg->samples ? *cfg->samples : kDefaultSamples);
  o.threads = c.threads;
  return o;
}

void emit(const Common& c, const std::vector<ReportRow>& rows,
          const std::vector<std::string>& columns) {
  const std::string text = c.out == "json" ? to_json(rows) + "\n" : to_csv(rows, columns);
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.output);
    if (!f) throw ConfigError("--output", "cannot write '" + c.output + "'");
    f << text;
  }
}

// "shannon" or a real number.
std::optional<double> parse_alpha(const std::string& s) {
  if (s == "shannon" || s == "1") return std::nullopt;
  std::size_t used = 0;
  double a = 0.0;
  try {
    a = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw DomainError("--alpha expects a number or 'shannon', got '" + s + "'");
  return a;
}

ReportRow base_row(const std::string& path, const MixtureParams& m) {
  ReportRow r;
  r.label = std::filesystem::path(path).stem().string();
  r.d = m.dim();
  r.m = m.size();
  for (const auto& c : m.components) r.dof.push_back(c.dof);
  return r;
}

int run_entropy(const std::string& path, const std::vector<std::string>& alphas,
                const std::string& method, const Common& c) {
  const ModelConfig cfg = load_config(path);
  const FormulaReadings readings = readings_from_name(c.readings);
  const McOptions opt = mc_options(c, &cfg);
  const MixtureParams& mix = cfg.mixture;
  if (method == "exact" && mix.size() > 1) {
    throw DomainError("exact entropies exist for single components only; use 'bounds' or --method mc");
  }
  std::vector<ReportRow> rows;
  for (const auto& s : alphas) {
    const std::optional<double> alpha = parse_alpha(s);
    ReportRow r = base_row(path, mix);
    r.quantity = "entropy";
    r.alpha = alpha;
    Estimate e;
    if (method == "exact") {
      const SkewTParams& p = mix.components.front();
      e = alpha ? skewt_renyi_estimate(p, *alpha, cfg.quadrature, readings)
                : skewt_shannon_estimate(p, cfg.quadrature, readings);
    } else if (method == "mc") {
      const Law law = mixture_law(mix);
      e = alpha ? mc_renyi(law, *alpha, opt) : mc_shannon(law, opt);
    } else {
      if (!alpha) throw DomainError("--method is estimates Renyi entropies only");
      e = is_renyi(mixture_law(mix), default_proposal(mix), *alpha, opt);
    }
    r.value = e.value;
    r.std_error = e.std_error;
    r.method = to_string(e.method);
    if (e.method == Method::plain_mc || e.method == Method::importance) {
      r.n = e.n;
      r.seed = e.seed;
    }
    rows.push_back(std::move(r));
  }
  emit(c, rows, entropy_columns());
  return kExitOk;
}

int run_bounds(const std::string& path, const std::vector<std::string>& alphas, bool oracle,
               const Common& c) {
  const ModelConfig cfg = load_config(path);
  const FormulaReadings readings = readings_from_name(c.readings);
  const McOptions opt = mc_options(c, &cfg);
  const MixtureParams& mix = cfg.mixture;

  std::vector<std::optional<double>> orders;
  std::vector<double> renyi_orders;
  for (const auto& s : alphas) {
    orders.push_back(parse_alpha(s));
    if (orders.back()) renyi_orders.push_back(require_integer_order(*orders.back()));
  }
  std::optional<EntropyProfile> prof;
  if (oracle) prof = mc_profile(mixture_law(mix), renyi_orders, opt);

  std::vector<ReportRow> rows;
  std::size_t next_renyi = 0;
  for (const auto& alpha : orders) {
    const BoundsReport b = alpha ? renyi_bounds(mix, static_cast<int>(*alpha), cfg.quadrature, readings)
                                 : shannon_bounds(mix, cfg.quadrature, readings);
    ReportRow r = base_row(path, mix);
    r.quantity = "bounds";
    r.alpha = alpha;
    r.method = "bounds";
    r.lower = b.lower;
    r.upper = b.upper;
    r.approx = b.approx;
    r.half_width = b.half_width;
    r.crossed = b.crossed;
    if (prof) {
      const Estimate& e = alpha ? prof->renyi[next_renyi++] : prof->shannon;
      r.oracle = e.value;
      r.oracle_se = e.std_error;
      r.n = e.n;
      r.seed = e.seed;
      r.pass = !b.crossed && e.value >= b.lower - 3 * e.std_error &&
               e.value <= b.upper + 3 * e.std_error;
    }
    rows.push_back(std::move(r));
  }
  emit(c, rows, bounds_columns(oracle));
  return kExitOk;
}

int run_reproduce(int table, ReproduceOptions ro, double min_pass, const Common& c) {
  ro.readings = readings_from_name(c.readings);
  ro.mc = mc_options(c, nullptr);
  const ReproduceResult res = reproduce_table(table, ro);
  emit(c, res.rows, reproduce_columns());
  const double frac = res.checked ? static_cast<double>(res.passed) / res.checked : 1.0;
  std::cerr << fmt::format("table {}: {}/{} checked cells pass ({:.1f}%), {} informational\n",
                           table, res.passed, res.checked, 100.0 * frac,
                           res.rows.size() - static_cast<std::size_t>(res.checked));
  return frac + 1e-12 < min_pass ? kExitReproduction : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropies of multivariate skew-t distributions and their mixtures"};
  app.require_subcommand(1);

  Common ec, bc, rc;
  std::string entropy_path, bounds_path, method = "exact";
  std::vector<std::string> entropy_alpha{"shannon"}, bounds_alpha{"shannon"};
  bool oracle = false;

  auto* entropy = app.add_subcommand("entropy", "Shannon or Renyi entropy of a model");
  entropy->add_option("config", entropy_path, "Model configuration (JSON)")->required();
  entropy->add_option("--alpha", entropy_alpha, "Order(s): 'shannon' or a real > 0")
      ->capture_default_str();
  entropy->add_option("--method", method, "exact (formula), mc or is (importance sampling)")
      ->check(CLI::IsMember({"exact", "mc", "is"}))
      ->capture_default_str();
  add_common(entropy, ec, "exact");

  auto* bounds = app.add_subcommand("bounds", "Mixture entropy bounds and midpoint approximation");
  bounds->add_option("config", bounds_path, "Mixture configuration (JSON)")->required();
  bounds->add_option("--alpha", bounds_alpha, "Order(s): 'shannon' or an integer >= 2")
      ->capture_default_str();
  bounds->add_flag("--oracle,!--no-oracle", oracle, "Add a Monte Carlo oracle column");
  add_common(bounds, bc, "exact");

  int table = 1;
  double min_pass = 0.9;
  ReproduceOptions ro;
  auto* reproduce = app.add_subcommand("reproduce", "Compare against the published tables");
  reproduce->add_option("--table", table, "Table id")->check(CLI::Range(1, 3))->required();
  reproduce->add_option("--rows", ro.rows, "Filter such as \"d=1,m=2\"");
  reproduce->add_option("--tolerance", ro.tolerance, "Absolute tolerance in nats")
      ->capture_default_str();
  reproduce->add_option("--hw-tolerance", ro.half_width_tolerance,
                        "Tolerance for the table 3 half-width column")
      ->capture_default_str();
  reproduce->add_option("--limit-alpha", ro.limit_alpha,
                        "Order standing in for the alpha -> infinity column")
      ->capture_default_str();
  reproduce->add_option("--min-pass", min_pass, "Exit 2 below this pass fraction")
      ->capture_default_str();
  add_common(reproduce, rc, "tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*entropy) return run_entropy(entropy_path, entropy_alpha, method, ec);
    if (*bounds) return run_bounds(bounds_path, bounds_alpha, oracle, bc);
    if (*reproduce) return run_reproduce(table, ro, min_pass, rc);
  } catch (const mstent::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
