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
#include "mstent/config.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mstent/errors.hpp"

namespace mstent {
namespace {

using nlohmann::json;

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw ConfigError(path + "." + key, "missing required field");
  return obj.at(key);
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "must be finite");
  return v;
}

Vector vector_of(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a non-empty number list");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = number(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

Matrix matrix_of(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a list of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ConfigError(rp, "expected a row of " + std::to_string(n) + " numbers");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = number(row[static_cast<std::size_t>(c)], rp + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

SkewTParams component(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  const Vector mu = vector_of(field(j, "mu", path), path + ".mu");
  Matrix s = matrix_of(field(j, "scale", path), path + ".scale");
  const Vector delta = vector_of(field(j, "delta", path), path + ".delta");
  const double dof = number(field(j, "dof", path), path + ".dof");
  if (s.rows() != mu.size()) {
    throw ConfigError(path + ".scale", "dimension " + std::to_string(s.rows()) +
                                           " does not match mu length " +
                                           std::to_string(mu.size()));
  }
  if (delta.size() != mu.size()) {
    throw ConfigError(path + ".delta", "length " + std::to_string(delta.size()) +
                                           " does not match mu length " +
                                           std::to_string(mu.size()));
  }
  if (!(dof > 0)) throw ConfigError(path + ".dof", "must be positive");
  try {
    return SkewTParams(mu, SpdMatrix(s), delta, dof);
  } catch (const MatrixError& e) {
    throw ConfigError(path + ".scale", e.what());
  } catch (const ParameterError& e) {
    throw ConfigError(path, e.what());
  }
}

}  // namespace

ModelConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("$", "expected an object");
  const json& comps = field(doc, "components", "$");
  if (!comps.is_array() || comps.empty()) {
    throw ConfigError("$.components", "expected a non-empty list");
  }
  std::vector<SkewTParams> parts;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    parts.push_back(component(comps[i], "$.components[" + std::to_string(i) + "]"));
  }
  std::vector<double> weights;
  if (doc.contains("weights")) {
    const Vector w = vector_of(doc["weights"], "$.weights");
    weights.assign(w.data(), w.data() + w.size());
  } else if (parts.size() == 1) {
    weights = {1.0};
  } else {
    throw ConfigError("$.weights", "required when there is more than one component");
  }
  if (weights.size() != parts.size()) {
    throw ConfigError("$.weights", "has " + std::to_string(weights.size()) +
                                       " entries for " + std::to_string(parts.size()) +
                                       " components");
  }
  const int d = parts.front().dim();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].dim() != d) {
      throw ConfigError("$.components[" + std::to_string(i) + "]",
                        "dimension differs from component 0");
    }
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      throw ConfigError("$.weights[" + std::to_string(i) + "]", "must be non-negative");
    }
  }
  std::optional<MixtureParams> mix;
  try {
    mix.emplace(std::move(parts), std::move(weights));
  } catch (const ParameterError& e) {
    throw ConfigError("$.weights", e.what());
  }

  ModelConfig cfg{std::move(*mix), std::nullopt, std::nullopt, {}};
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw ConfigError("$.seed", "expected a non-negative integer");
    }
    if (doc["seed"].is_number_integer() && doc["seed"].get<long long>() < 0) {
      throw ConfigError("$.seed", "expected a non-negative integer");
    }
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("samples")) {
    if (!doc["samples"].is_number_integer() || doc["samples"].get<long long>() < 2) {
      throw ConfigError("$.samples", "expected an integer >= 2");
    }
    cfg.samples = doc["samples"].get<std::size_t>();
  }
  if (doc.contains("quadrature")) {
    const json& q = doc["quadrature"];
    if (!q.is_object()) throw ConfigError("$.quadrature", "expected an object");
    if (q.contains("abs_tol")) cfg.quadrature.abs_tol = number(q["abs_tol"], "$.quadrature.abs_tol");
    if (q.contains("rel_tol")) cfg.quadrature.rel_tol = number(q["rel_tol"], "$.quadrature.rel_tol");
    if (!(cfg.quadrature.abs_tol > 0) || !(cfg.quadrature.rel_tol > 0)) {
      throw ConfigError("$.quadrature", "tolerances must be positive");
    }
  }
  return cfg;
}

ModelConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("$", "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string config_to_json(const MixtureParams& m) {
  json comps = json::array();
  for (const auto& c : m.components) {
    json scale = json::array();
    for (int r = 0; r < c.dim(); ++r) {
      json row = json::array();
      for (int k = 0; k < c.dim(); ++k) row.push_back(c.scale.matrix()(r, k));
      scale.push_back(row);
    }
    comps.push_back({{"mu", std::vector<double>(c.mu.data(), c.mu.data() + c.dim())},
                     {"scale", scale},
                     {"delta", std::vector<double>(c.delta.data(), c.delta.data() + c.dim())},
                     {"dof", c.dof}});
  }
  return json{{"components", comps}, {"weights", m.weights}}.dump(2);
}

}  // namespace mstent
