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

#include "mstent/readings.hpp"

#include "mstent/errors.hpp"

namespace mstent {

std::string to_string(DigammaArgs r) {
  return r == DigammaArgs::halved ? "halved" : "printed";
}

std::string to_string(ShannonWeight r) {
  switch (r) {
    case ShannonWeight::exact: return "exact";
    case ShannonWeight::printed: return "printed";
    case ShannonWeight::printed_v1: return "printed_v1";
  }
  return "?";
}

std::string to_string(PowerExpectation r) {
  switch (r) {
    case PowerExpectation::exact: return "exact";
    case PowerExpectation::printed: return "printed";
    case PowerExpectation::alt: return "alt";
  }
  return "?";
}

std::string to_string(MixtureCovariance r) {
  return r == MixtureCovariance::total ? "total" : "printed";
}

FormulaReadings readings_from_name(std::string_view name) {
  if (name == "exact") return FormulaReadings::exact();
  if (name == "tables") return FormulaReadings::tables();
  throw DomainError("unknown formula readings '" + std::string(name) +
                    "' (expected exact or tables)");
}

}  // namespace mstent
