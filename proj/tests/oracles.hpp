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

// Reference computations for the test suites. Each one follows a different
// route from the library code it checks: plain enumeration, untruncated
// sums, finite differences.

#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "arakelov/lattice.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Point = std::pair<std::int64_t, std::int64_t>;  // numerators over N
using PointSet = std::set<Point>;

// Every cyclic subgroup of order N of (Z/N)^2, as the set of its elements,
// found by collecting <g> for every element g of exact order N.
std::set<PointSet> cyclic_subgroups_by_enumeration(std::int64_t n);

// Elements of (Z/N)^2 of exact additive order M (M | N), in units of 1/M.
std::vector<Point> exact_order_by_enumeration(std::int64_t m);

// Trivial subgroup-closure check used for kernels.
bool is_subgroup(const std::vector<arakelov::TorsionPoint>& pts);

// theta(z; tau) summed over |n| <= k with no argument reduction.
Complex theta_direct(Complex z, Complex tau, int k = 60);

// eta via 600 product factors, no truncation logic.
Complex eta_direct(Complex tau);

// ||Delta|| by direct evaluation at the given marking, no reduction.
double norm_delta_direct(Complex tau);

// Central difference of f at x with step h.
template <typename F>
Complex central_difference(F&& f, Complex x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Deterministic uniform doubles from a 64-bit Mersenne twister.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  // Interior point of the fundamental domain with Im in [im_lo, im_hi].
  arakelov::TauPoint reduced_tau(double im_lo, double im_hi);

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
