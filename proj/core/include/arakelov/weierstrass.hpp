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

#include <array>

#include "arakelov/lattice.hpp"
#include "arakelov/modular.hpp"

namespace arakelov {

// y^2 = 4x^3 - p x - q.
//
// The discriminant p^3 - 27 q^2 is carried alongside the coefficients. For
// curves built from coefficients it is computed in extended precision from
// the given doubles; eisenstein() fills it from the cancellation-free
// q-expansion instead, since near the cusp p^3 and 27 q^2 agree to many
// digits and their double-precision difference is mostly rounding noise.
class WeierstrassCurve {
 public:
  WeierstrassCurve(Complex p, Complex q);
  WeierstrassCurve(Complex p, Complex q, Complex discriminant)
      : p_(p), q_(q), discriminant_(discriminant) {}

  Complex p() const { return p_; }
  Complex q() const { return q_; }
  Complex discriminant() const { return discriminant_; }
  bool is_singular() const;

  // Curve of the lattice lambda * Lambda: (lambda^-4 p, lambda^-6 q).
  WeierstrassCurve rescaled(Complex lambda) const;

 private:
  Complex p_;
  Complex q_;
  Complex discriminant_;
};

struct PeriodData {
  Complex omega1;
  Complex omega2;
  TauPoint tau;  // omega2 / omega1
  int agm_iterations = 0;
};

struct RootTriple {
  Complex alpha1;
  Complex alpha2;
  Complex alpha3;
};

// (g2, g3) of the lattice Z + tau Z from the Eisenstein q-series. tau is used
// as given (the coefficients depend on the marking).
WeierstrassCurve eisenstein(const TauPoint& tau, const SeriesTolerance& tol = {});

// Roots of 4x^3 - p x - q for the lattice Z + tau Z, from theta constants:
//   a1 - a3 = pi^2 theta(0)^4
//   a1 - a2 = pi^2 theta(1/2)^4
//   a2 - a3 = pi^2 exp(pi i tau) theta(tau/2)^4
// together with a1 + a2 + a3 = 0. a1, a2, a3 are the values of the
// Weierstrass function at 1/2, (1+tau)/2, tau/2.
RootTriple half_period_roots(const TauPoint& tau,
                             const SeriesTolerance& tol = {});

// Roots of the cubic by Cardano plus one Newton step. The two closest roots
// are then re-split using the carried discriminant, which keeps their
// difference accurate when they nearly coincide. Order is unspecified.
RootTriple cubic_roots(const WeierstrassCurve& curve);

// cubic_roots of eisenstein(tau), relabelled to match half_period_roots.
RootTriple labeled_cubic_roots(const TauPoint& tau,
                               const SeriesTolerance& tol = {});

// 4 (x - a1)(x - a2)(x - a3) written as 4x^3 - p x - q.
WeierstrassCurve curve_from_roots(const RootTriple& roots);

// 16 prod_{i<j} (a_i - a_j)^2
Complex discriminant_from_roots(const RootTriple& roots);

struct ThomaeResiduals {
  double r13;
  double r12;
  double r23;
};

// Relative residuals (omega1 = 1) of |a1 - a3| vs pi^2 |theta(0)|^4,
// |a1 - a2| vs pi^2 |theta(1/2)|^4 and |a2 - a3| vs
// pi^2 |exp(pi i tau / 2) theta(tau/2)^2|^2, with the roots taken from the
// Eisenstein cubic.
ThomaeResiduals thomae_residuals(const TauPoint& tau,
                                 const SeriesTolerance& tol = {});

// |D - (2 pi)^12 omega1^-12 Delta(tau)| / |(2 pi)^12 omega1^-12 Delta(tau)|
double discriminant_relation_residual(const PeriodData& periods,
                                      const WeierstrassCurve& curve,
                                      const SeriesTolerance& tol = {});

struct TwoTorsionCheck {
  // Pairs (1,2), (1,3), (2,3).
  std::array<double, 3> green12;   // G(P_i, P_j)^12 from the Green function
  std::array<double, 3> formula;   // 16 |a_i - a_j|^2 / (|a_i - a_k||a_j - a_k|)
  std::array<double, 3> residuals; // relative differences
};

// Half periods (1/2, (1+tau)/2, tau/2) are matched to (a1, a2, a3).
TwoTorsionCheck two_torsion_green_check(const TauPoint& tau,
                                        const SeriesTolerance& tol = {});

// Periods of dx/y by the arithmetic-geometric mean. Throws DomainError for a
// singular cubic and ConvergenceError if the AGM stalls.
PeriodData periods_from_curve(const WeierstrassCurve& curve,
                              const SeriesTolerance& tol = {});

// Klein j = 1728 p^3 / D.
Complex j_invariant(const WeierstrassCurve& curve);

}  // namespace arakelov
