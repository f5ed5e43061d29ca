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
#ifndef MSTENT_CONFIG_HPP
#define MSTENT_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "mstent/distributions.hpp"
#include "mstent/quadrature.hpp"

namespace mstent {

/**
 * Model configuration document (JSON):
 *
 *   {"components": [{"mu": [...], "scale": [[...], ...], "delta": [...], "dof": 3}],
 *    "weights": [...], "seed": 42, "samples": 100000,
 *    "quadrature": {"abs_tol": 1e-9, "rel_tol": 1e-9}}
 *
 * "weights" may be omitted for a single component. Validation failures throw
 * ConfigError whose path() names the offending entry, e.g.
 * "$.components[1].scale".
 */
struct ModelConfig {
  MixtureParams mixture;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  QuadratureSpec quadrature;
};

ModelConfig parse_config(const std::string& text);
ModelConfig load_config(const std::string& path);

/// Serializes a mixture in the same schema.
std::string config_to_json(const MixtureParams& m);

}  // namespace mstent

#endif  // MSTENT_CONFIG_HPP
