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

#include "arakelov/lattice.hpp"

namespace arakelov {

// Truncation control shared by every q-series and theta sum.
class SeriesTolerance {
 public:
  SeriesTolerance() = default;
  // Throws DomainError unless 0 < rel_tol < 1 and max_terms >= 8.
  SeriesTolerance(double rel_tol, int max_terms = 256);

  double rel_tol() const { return rel_tol_; }
  int max_terms() const { return max_terms_; }

 private:
  double rel_tol_ = 1e-12;
  int max_terms_ = 256;
};

// Riemann theta function sum_n exp(pi i n^2 tau + 2 pi i n z).
//
// z is first moved to the strip |Im z| <= Im(tau) / 2 and the
// quasi-periodicity factor is applied analytically. The sum is truncated
// symmetrically once the dominant neglected term falls below
// rel_tol * max(1, |partial sum|). Throws ConvergenceError if that needs
// more than max_terms terms on each side; reduce tau first in that case.
Complex theta(Complex z, const TauPoint& tau, const SeriesTolerance& tol = {});

// d theta / dz, same truncation policy.
Complex theta_dz(Complex z, const TauPoint& tau,
                 const SeriesTolerance& tol = {});

// eta(tau) = q^(1/24) prod (1 - q^k), principal branch of q^(1/24).
Complex eta(const TauPoint& tau, const SeriesTolerance& tol = {});

// Delta(tau) = q prod (1 - q^k)^24, evaluated by its own product.
Complex delta(const TauPoint& tau, const SeriesTolerance& tol = {});

// log |eta(tau)| and log |Delta(tau)|, safe for large Im tau.
double log_abs_eta(const TauPoint& tau, const SeriesTolerance& tol = {});
double log_abs_delta(const TauPoint& tau, const SeriesTolerance& tol = {});

// ||theta||(z; tau) = (Im tau)^(1/4) exp(-pi y^2 / Im tau) |theta(z; tau)|
// with y = Im z. Depends only on the class of z modulo Z + tau Z. Evaluated
// at the given marking; tau is not reduced here.
double norm_theta(const TorusPoint& z, const TauPoint& tau,
                  const SeriesTolerance& tol = {});
double log_norm_theta(const TorusPoint& z, const TauPoint& tau,
                      const SeriesTolerance& tol = {});

// SL(2,Z)-invariant metric invariants of the torus.
struct ModularInvariants {
  TauPoint reduced_tau;
  double norm_eta;        // (Im tau)^(1/4) |eta|
  double norm_delta;      // (Im tau)^6 |Delta|
  double a_invariant;     // 1 / (2 pi norm_eta^2)
  double log_norm_eta;
  double log_norm_delta;
};

// tau is reduced to the fundamental domain before evaluation.
ModularInvariants invariants(const TauPoint& tau,
                             const SeriesTolerance& tol = {});

}  // namespace arakelov
