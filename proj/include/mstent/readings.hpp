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

#ifndef MSTENT_READINGS_HPP
#define MSTENT_READINGS_HPP

#include <string>
#include <string_view>

namespace mstent {

// Several published entropy formulas admit more than one reading. Every
// variant is kept selectable so the choice can be checked against the Monte
// Carlo oracle; the defaults are the ones that agree with it.

/// Digamma term of the multivariate-t Shannon entropy.
enum class DigammaArgs {
  halved,   ///< ((v+d)/2) [psi((v+d)/2) - psi(v/2)]
  printed,  ///< ((v+d)/2) [psi(v+d) - psi(v)]
};

/// Weight factor 2 G(b(y)) inside the skewness correction, y ~ t(v+d-1).
enum class ShannonWeight {
  exact,       ///< b = |lambda| y sqrt((v+d)/(v+d-1+y^2)), G with v+d dof
  printed,     ///< b = (|dt|/beta^2) y sqrt((v+1)/(v+y^2)), G with v+d dof
  printed_v1,  ///< as printed, G with v+1 dof
};

/// Distribution of x in the alpha-power expectation E{(2G(.))^alpha}.
enum class PowerExpectation {
  exact,    ///< x ~ t(a(v+d)-1), denominator a(v+d)-1
  printed,  ///< x ~ t(a(v+d)-d), denominator a(v+d)-1
  alt,      ///< x ~ t(a(v+d)-d), denominator a(v+d)-d
};

/// Covariance used by the Gaussian maximum-entropy upper bound.
enum class MixtureCovariance {
  total,    ///< law of total covariance
  printed,  ///< sum e_i v_i/(v_i-2) S_i - (sum e_i c_i dh_i)(...)'
};

struct FormulaReadings {
  DigammaArgs digamma = DigammaArgs::halved;
  ShannonWeight weight = ShannonWeight::exact;
  PowerExpectation power = PowerExpectation::exact;
  MixtureCovariance covariance = MixtureCovariance::total;

  /// Readings that agree with the Monte Carlo oracle (the default).
  static FormulaReadings exact() { return {}; }

  /// Readings under which the published tables were computed: printed
  /// skewness weight and printed mixture covariance.
  static FormulaReadings tables() {
    FormulaReadings r;
    r.weight = ShannonWeight::printed;
    r.covariance = MixtureCovariance::printed;
    return r;
  }

  bool operator==(const FormulaReadings&) const = default;
};

std::string to_string(DigammaArgs r);
std::string to_string(ShannonWeight r);
std::string to_string(PowerExpectation r);
std::string to_string(MixtureCovariance r);

/// Parses "exact" or "tables"; throws DomainError otherwise.
FormulaReadings readings_from_name(std::string_view name);

}  // namespace mstent

#endif  // MSTENT_READINGS_HPP
