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

#include "arakelov/lattice.hpp"
#include "arakelov/modular.hpp"

namespace arakelov {

// G(P, Q) together with its logarithm. A zero value carries
// log_value = -infinity.
struct GreenValue {
  double value;
  double log_value;
};

// Arakelov-Green function G(0, z) = ||theta||(z + (1+tau)/2) / ||eta||.
//
// tau is reduced to the fundamental domain and z transported to the new
// marking first. G(0, 0) is reported as an exact zero only for the exact
// lattice point; nearby floating-point points are not snapped.
GreenValue green(const TauPoint& tau, const TorusPoint& z,
                 const SeriesTolerance& tol = {});
GreenValue green(const TauPoint& tau, const TorsionPoint& z,
                 const SeriesTolerance& tol = {});

// G(P, Q) = G(0, Q - P).
GreenValue green(const TauPoint& tau, const TorusPoint& p, const TorusPoint& q,
                 const SeriesTolerance& tol = {});

// |sum_{Q in f^-1(w)} log G_X(Q, z) - log G_X'(w, f(z))|.
// w lives on the target torus, z on the source. Throws DomainError when z
// lies in the fiber over w.
double green_projection_check(const Isogeny& isogeny, const TorusPoint& w,
                              const TorusPoint& z,
                              const SeriesTolerance& tol = {});

// Product of G(0, P) over the N^2 - 1 non-zero points of X[N].
double torsion_product(const TauPoint& tau, std::int64_t n,
                       const SeriesTolerance& tol = {});

struct EnergyComparison {
  double product;    // prod over non-zero kernel points of G(0, P)
  double predicted;  // sqrt(N) ||eta||(X')^2 / ||eta||(X)^2
};

EnergyComparison energy(const Isogeny& isogeny,
                        const SeriesTolerance& tol = {});

// sqrt(N) A(X) / A(X').
double energy_via_a(const Isogeny& isogeny, const SeriesTolerance& tol = {});

// Richardson-extrapolated lim_{t->0} |z| / G(0, z) / sqrt(Im tau) along
// z = t * direction (complex coordinate of the reduced marking), sampled at
// t = 1e-2, 5e-3, 2.5e-3. G(0, z) = G(0, -z) makes the error even in t.
double adjunction_limit(const TauPoint& tau, Complex direction,
                        const SeriesTolerance& tol = {});

// Relative difference between adjunction_limit along 0.3 + 0.4i and A(X).
double a_invariant_adjunction_check(const TauPoint& tau,
                                    const SeriesTolerance& tol = {});

// Midpoint rule for the integral of log G(0, .) against mu = da ^ db on an
// M x M grid. Rows are summed in parallel and combined in a fixed order.
double green_mean_integral(const TauPoint& tau, int grid,
                           const SeriesTolerance& tol = {});

}  // namespace arakelov
