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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "arakelov/errors.hpp"
#include "arakelov/green.hpp"
#include "arakelov/modular.hpp"
#include "oracles.hpp"

namespace arakelov {
namespace {

constexpr double kPi = std::numbers::pi;

// G(0, z) straight from the defining formula at the given marking, no
// reduction of tau and no reuse of the library's theta.
double green_direct(const TauPoint& tau, Complex z) {
  const Complex w = z + (1.0 + tau.value()) / 2.0;
  const double norm = std::pow(tau.im(), 0.25) * std::exp(-kPi * w.imag() * w.imag() / tau.im()) *
                      std::abs(oracle::theta_direct(w, tau.value(), 120));
  const double norm_eta = std::pow(tau.im(), 0.25) * std::abs(oracle::eta_direct(tau.value()));
  return norm / norm_eta;
}

TEST(Green, ExactZeroAtTheOrigin) {
  const TauPoint tau(0.2, 1.3);
  const GreenValue g = green(tau, TorusPoint(0.0, 0.0));
  EXPECT_EQ(g.value, 0.0);
  EXPECT_TRUE(std::isinf(g.log_value) && g.log_value < 0.0);
  EXPECT_EQ(green(tau, TorsionPoint(0, 0, 1)).value, 0.0);
  const GreenValue near = green(tau, TorusPoint(1e-15, 0.0));
  EXPECT_GT(near.value, 0.0);
}

TEST(Green, MatchesDirectFormula) {
  oracle::Sampler rng(21);
  for (int i = 0; i < 100; ++i) {
    const TauPoint tau(rng.uniform(-0.5, 0.5), rng.uniform(0.6, 2.5));
    const TorusPoint z(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
    const GreenValue g = green(tau, z);
    EXPECT_NEAR(g.value / green_direct(tau, z.to_complex(tau)), 1.0, 1e-9);
    EXPECT_NEAR(g.log_value, std::log(g.value), 1e-12);
  }
}

TEST(Green, HalfPeriodProductIsTwo) {
  oracle::Sampler rng(22);
  for (int i = 0; i < 30; ++i) {
    const TauPoint tau = rng.reduced_tau(0.9, 4.0);
    const double prod = green(tau, TorsionPoint(1, 0, 2)).value *
                        green(tau, TorsionPoint(0, 1, 2)).value *
                        green(tau, TorsionPoint(1, 1, 2)).value;
    EXPECT_NEAR(prod, 2.0, 2e-12);
  }
}

TEST(Green, Symmetry) {
  oracle::Sampler rng(23);
  for (int i = 0; i < 1000; ++i) {
    const TauPoint tau(rng.uniform(-2.0, 2.0), rng.uniform(0.2, 3.0));
    const TorusPoint z(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
    EXPECT_LT(std::abs(green(tau, z).log_value - green(tau, -z).log_value), 1e-10);
  }
}

TEST(Green, TranslationInvarianceForPairs) {
  const TauPoint tau(0.1, 1.2);
  const TorusPoint p(0.3, 0.7), q(0.55, 0.1);
  EXPECT_DOUBLE_EQ(green(tau, p, q).value, green(tau, q - p).value);
  EXPECT_NEAR(green(tau, p, q).value, green(tau, q, p).value, 1e-13);
}

TEST(Green, IndependentOfTheMarking) {
  oracle::Sampler rng(24);
  for (int i = 0; i < 200; ++i) {
    const TauPoint tau = rng.reduced_tau(0.9, 3.0);
    const TorusPoint z(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
    // Same torus marked by -1/tau: z/tau in the new basis.
    const TauPoint s(-1.0 / tau.value());
    const TorusPoint zs = TorusPoint::from_complex(z.to_complex(tau) / tau.value(), s);
    EXPECT_NEAR(green(s, zs).log_value, green(tau, z).log_value, 1e-9);
    // And by tau + 3.
    const TauPoint t3(tau.re() + 3.0, tau.im());
    const TorusPoint z3 = TorusPoint::from_complex(z.to_complex(tau), t3);
    EXPECT_NEAR(green(t3, z3).log_value, green(tau, z).log_value, 1e-9);
  }
}

TEST(TorsionProduct, EqualsN) {
  EXPECT_DOUBLE_EQ(torsion_product(TauPoint(0.0, 1.0), 1), 1.0);
  EXPECT_NEAR(torsion_product(TauPoint(0.0, 1.0), 2) / 2.0, 1.0, 1e-9);
  EXPECT_NEAR(torsion_product(TauPoint(0.2, 1.3), 7) / 7.0, 1.0, 1e-8);
  EXPECT_THROW(torsion_product(TauPoint(0.0, 1.0), 0), DomainError);
}

TEST(Energy, TrivialAndFullTorsion) {
  const TauPoint tau(0.2, 1.3);
  const EnergyComparison one = energy(quotient(tau, CyclicSubgroup::make(0, 1, 1)));
  EXPECT_DOUBLE_EQ(one.product, 1.0);
  EXPECT_NEAR(one.predicted, 1.0, 1e-14);
  for (std::int64_t n = 2; n <= 5; ++n) {
    const EnergyComparison e = energy(multiplication_isogeny(tau, n));
    EXPECT_NEAR(e.product / static_cast<double>(n), 1.0, 1e-9);
    EXPECT_NEAR(e.predicted / static_cast<double>(n), 1.0, 1e-12);
  }
}

TEST(Energy, KernelProductMatchesEtaRatio) {
  const TauPoint tau(0.0, 1.0);
  for (const auto& c : cyclic_subgroups(3)) {
    const Isogeny iso = quotient(tau, c);
    const EnergyComparison e = energy(iso);
    EXPECT_NEAR(e.product / e.predicted, 1.0, 1e-8);
    EXPECT_NEAR(energy_via_a(iso) / e.predicted, 1.0, 1e-12);
  }
  const Isogeny two = quotient(TauPoint(0.0, 2.0), CyclicSubgroup::make(1, 0, 2));
  EXPECT_NEAR(energy_via_a(two) / energy(two).product, 1.0, 1e-8);
}

TEST(Energy, OracleRatioFromDirectSeries) {
  // predicted recomputed from eta_direct at the unreduced image lattice.
  const TauPoint tau(0.1, 1.1);
  const Isogeny iso = quotient(tau, CyclicSubgroup::make(2, 1, 5));
  const double src = std::pow(tau.im(), 0.25) * std::abs(oracle::eta_direct(tau.value()));
  const double dst =
      std::pow(iso.target.im(), 0.25) * std::abs(oracle::eta_direct(iso.target.value()));
  EXPECT_NEAR(energy(iso).product / (std::sqrt(5.0) * dst * dst / (src * src)), 1.0, 1e-8);
}

TEST(Projection, IdentityIsogeny) {
  const TauPoint tau(0.0, 1.0);
  const Isogeny iso = quotient(tau, CyclicSubgroup::make(0, 1, 1));
  EXPECT_LT(green_projection_check(iso, TorusPoint(0.2, 0.3), TorusPoint(0.6, 0.1)), 1e-12);
}

TEST(Projection, OrderTwoAndMultiplication) {
  const TauPoint tau(0.0, 1.0);
  const Isogeny two = quotient(tau, CyclicSubgroup::make(1, 0, 2));
  EXPECT_LT(green_projection_check(two, TorusPoint(0.37, 0.81), TorusPoint(0.12, 0.44)), 1e-8);
  const Isogeny mul = multiplication_isogeny(TauPoint(0.2, 1.3), 2);
  EXPECT_LT(green_projection_check(mul, TorusPoint(0.0, 0.0), TorusPoint(0.3, 0.2)), 1e-8);
}

TEST(Projection, RejectsPointInTheFiber) {
  const TauPoint tau(0.0, 1.0);
  const Isogeny two = quotient(tau, CyclicSubgroup::make(1, 0, 2));
  EXPECT_THROW(green_projection_check(two, TorusPoint(0.0, 0.0), TorusPoint(0.5, 0.0)), DomainError);
}

TEST(Adjunction, LimitMatchesAInvariant) {
  EXPECT_LT(a_invariant_adjunction_check(TauPoint(0.0, 1.0)), 1e-6);
  EXPECT_LT(a_invariant_adjunction_check(TauPoint(0.5, 0.9)), 1e-6);
  const TauPoint tau(0.2, 1.3);
  const double x = adjunction_limit(tau, Complex(0.3, 0.4));
  const double y = adjunction_limit(tau, Complex(-1.0, 2.0));
  EXPECT_NEAR(x / y, 1.0, 1e-6);
  EXPECT_THROW(adjunction_limit(tau, Complex(0.0, 0.0)), DomainError);
}

TEST(MeanIntegral, ConvergesToZero) {
  for (const TauPoint& tau : {TauPoint(0.0, 1.0), TauPoint(0.0, 3.0)}) {
    double prev = INFINITY;
    for (int m : {64, 128, 256}) {
      const double v = std::abs(green_mean_integral(tau, m));
      EXPECT_LT(v, prev) << "M = " << m;
      prev = v;
    }
    EXPECT_LT(prev, 1e-3);
  }
  EXPECT_THROW(green_mean_integral(TauPoint(0.0, 1.0), 15), DomainError);
}

TEST(MeanIntegral, Deterministic) {
  const TauPoint tau(0.25, 1.1);
  EXPECT_EQ(green_mean_integral(tau, 96), green_mean_integral(tau, 96));
}

}  // namespace
}  // namespace arakelov
