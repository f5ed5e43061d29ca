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
#include "mstent/compositions.hpp"

#include <cmath>
#include <string>

#include "mstent/errors.hpp"

namespace mstent {
namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

double Composition::log_coefficient() const {
  // Exact integer first; the double conversion is the only rounding step.
  const double c = coefficient.convert_to<double>();
  if (std::isfinite(c)) return std::log(c);
  const auto bits = static_cast<double>(boost::multiprecision::msb(coefficient));
  const BigInt top = coefficient >> static_cast<unsigned>(bits - 60);
  return std::log(top.convert_to<double>()) + (bits - 60) * std::log(2.0);
}

BigInt composition_count(int m, int alpha, bool positive_only) {
  if (m < 1 || alpha < 0) throw DomainError("composition needs m >= 1 and alpha >= 0");
  if (positive_only) return alpha < m ? BigInt(0) : binomial(alpha - 1, m - 1);
  return binomial(alpha + m - 1, m - 1);
}

void for_each_composition(int m, int alpha, bool positive_only,
                          const std::function<void(const Composition&)>& fn,
                          std::size_t cap) {
  if (m < 1 || alpha < 1) throw DomainError("composition needs m >= 1 and alpha >= 1");
  const BigInt count = composition_count(m, alpha, positive_only);
  if (count > cap) {
    throw CapError("composition count " + count.str() + " for m=" + std::to_string(m) +
                   ", alpha=" + std::to_string(alpha) + " exceeds the cap " +
                   std::to_string(cap));
  }
  std::vector<BigInt> factorial(alpha + 1);
  factorial[0] = 1;
  for (int i = 1; i <= alpha; ++i) factorial[i] = factorial[i - 1] * i;

  const int lo = positive_only ? 1 : 0;
  Composition c;
  c.parts.assign(m, 0);
  std::vector<BigInt> denom(m + 1);
  denom[0] = 1;
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == m - 1) {
      if (remaining < lo) return;
      c.parts[i] = remaining;
      c.coefficient = factorial[alpha] / (denom[i] * factorial[remaining]);
      fn(c);
      return;
    }
    const int reserve = lo * (m - 1 - i);
    for (int k = remaining - reserve; k >= lo; --k) {
      c.parts[i] = k;
      denom[i + 1] = denom[i] * factorial[k];
      rec(i + 1, remaining - k);
    }
  };
  rec(0, alpha);
}

std::vector<Composition> enumerate_compositions(int m, int alpha, std::size_t cap) {
  std::vector<Composition> out;
  for_each_composition(m, alpha, false, [&](const Composition& c) { out.push_back(c); }, cap);
  return out;
}

}  // namespace mstent
