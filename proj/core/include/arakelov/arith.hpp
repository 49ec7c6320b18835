// Copyright 2026 The arakelov-torus Authors
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

#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace arakelov {

// Prime factorization by trial division, primes ascending.
struct PrimePower {
  std::int64_t prime;
  int exponent;
};

std::vector<PrimePower> factorize(std::int64_t n);

// All positive divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

// Non-negative residue of x modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Exact rational with positive denominator in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  friend Rational operator+(const Rational& x, const Rational& y);
  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace arakelov
