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
#ifndef MSTENT_COMPOSITIONS_HPP
#define MSTENT_COMPOSITIONS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <functional>
#include <vector>

namespace mstent {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultCompositionCap = 10000000;

/// m-tuple of non-negative parts summing to alpha with its exact
/// multinomial coefficient alpha! / prod(k_i!).
struct Composition {
  std::vector<int> parts;
  BigInt coefficient;

  double log_coefficient() const;
};

/// Number of compositions of alpha into m parts (zero parts allowed):
/// C(alpha + m - 1, m - 1).
BigInt composition_count(int m, int alpha, bool positive_only = false);

/**
 * Visits every composition exactly once, first part descending
 * (for m = 2, alpha = 2: (2,0), (1,1), (0,2)). Throws CapError when the count
 * exceeds \p cap.
 */
void for_each_composition(int m, int alpha, bool positive_only,
                          const std::function<void(const Composition&)>& fn,
                          std::size_t cap = kDefaultCompositionCap);

std::vector<Composition> enumerate_compositions(int m, int alpha,
                                                std::size_t cap = kDefaultCompositionCap);

}  // namespace mstent

#endif  // MSTENT_COMPOSITIONS_HPP
