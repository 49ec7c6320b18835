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

#include "arakelov/modular.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "arakelov/errors.hpp"

namespace arakelov {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Safety factor on rel_tol for the product truncation: the neglected tail
// of prod (1 - q^k) is about |q|^K, and Delta raises it to the 24th power.
constexpr double kProductMargin = 1e-2;

struct ThetaSums {
  Complex value;
  Complex deriv;
};

[[noreturn]] void throw_budget(const char* what, const TauPoint& tau,
                               int max_terms) {
  throw ConvergenceError(std::string(what) + ": tolerance not reached within " +
                         std::to_string(max_terms) +
                         " terms (Im tau = " + std::to_string(tau.im()) +
                         "); reduce tau first");
}

// Symmetric partial sums of theta and theta' at z0 with |Im z0| <= Im(tau)/2.
ThetaSums theta_sums(Complex z0, const TauPoint& tau,
                     const SeriesTolerance& tol) {
  const double t = tau.im();
  const double y = std::abs(z0.imag());
  const Complex tau_c = tau.value();
  Complex sum = 1.0;
  Complex deriv = 0.0;
  for (int n = 1;; ++n) {
    const double nd = static_cast<double>(n);
    const double bound = std::exp(-kPi * t * nd * nd + 2.0 * kPi * y * nd);
    if (nd > y / t && bound < tol.rel_tol() * std::max(1.0, std::abs(sum))) {
      break;
    }
    if (n > tol.max_terms()) throw_budget("theta", tau, tol.max_terms());
    const Complex quad = std::exp(kI * kPi * nd * nd * tau_c);
    const Complex plus = std::exp(2.0 * kPi * kI * nd * z0);
    const Complex minus = std::exp(-2.0 * kPi * kI * nd * z0);
    sum += quad * (plus + minus);
    deriv += 2.0 * kPi * kI * nd * quad * (plus - minus);
  }
  return {sum, deriv};
}

struct StripShift {
  Complex z0;
  double m;  // z = z0 + m tau + integer
};

StripShift to_strip(Complex z, const TauPoint& tau) {
  const double m = std::floor(z.imag() / tau.im() + 0.5);
  Complex z0 = z - m * tau.value();
  z0 -= std::floor(z0.real() + 0.5);
  return {z0, m};
}

// sum_k log|1 - q^k| over the terms kept by the product truncation.
double log_abs_product(const TauPoint& tau, const SeriesTolerance& tol,
                       const char* what) {
  const Complex q = tau.nome();
  Complex qk = 1.0;
  double acc = 0.0;
  for (int k = 1;; ++k) {
    qk *= q;
    if (std::abs(qk) < tol.rel_tol() * kProductMargin) break;
    if (k > tol.max_terms()) throw_budget(what, tau, tol.max_terms());
    acc += std::log(std::abs(1.0 - qk));
  }
  return acc;
}

Complex product(const TauPoint& tau, const SeriesTolerance& tol,
                const char* what) {
  const Complex q = tau.nome();
  Complex qk = 1.0;
  Complex acc = 1.0;
  for (int k = 1;; ++k) {
    qk *= q;
    if (std::abs(qk) < tol.rel_tol() * kProductMargin) break;
    if (k > tol.max_terms()) throw_budget(what, tau, tol.max_terms());
    acc *= 1.0 - qk;
  }
  return acc;
}

}  // namespace

SeriesTolerance::SeriesTolerance(double rel_tol, int max_terms)
    : rel_tol_(rel_tol), max_terms_(max_terms) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw DomainError("rel_tol must lie in (0, 1)");
  }
  if (max_terms < 8) throw DomainError("max_terms must be at least 8");
}

Complex theta(Complex z, const TauPoint& tau, const SeriesTolerance& tol) {
  const auto [z0, m] = to_strip(z, tau);
  const ThetaSums s = theta_sums(z0, tau, tol);
  if (m == 0.0) return s.value;
  const Complex factor =
      std::exp(-kI * kPi * m * m * tau.value() - 2.0 * kPi * kI * m * z0);
  return factor * s.value;
}

Complex theta_dz(Complex z, const TauPoint& tau, const SeriesTolerance& tol) {
  const auto [z0, m] = to_strip(z, tau);
  const ThetaSums s = theta_sums(z0, tau, tol);
  if (m == 0.0) return s.deriv;
  const Complex factor =
      std::exp(-kI * kPi * m * m * tau.value() - 2.0 * kPi * kI * m * z0);
  return factor * (s.deriv - 2.0 * kPi * kI * m * s.value);
}

Complex eta(const TauPoint& tau, const SeriesTolerance& tol) {
  const Complex q24 = std::exp(2.0 * kPi * kI * tau.value() / 24.0);
  return q24 * product(tau, tol, "eta");
}

Complex delta(const TauPoint& tau, const SeriesTolerance& tol) {
  const Complex p = product(tau, tol, "delta");
  const Complex p3 = p * p * p;
  const Complex p6 = p3 * p3;
  const Complex p12 = p6 * p6;
  return tau.nome() * (p12 * p12);
}

double log_abs_eta(const TauPoint& tau, const SeriesTolerance& tol) {
  return -2.0 * kPi * tau.im() / 24.0 + log_abs_product(tau, tol, "eta");
}

double log_abs_delta(const TauPoint& tau, const SeriesTolerance& tol) {
  return -2.0 * kPi * tau.im() + 24.0 * log_abs_product(tau, tol, "delta");
}

double log_norm_theta(const TorusPoint& z, const TauPoint& tau,
                      const SeriesTolerance& tol) {
  // Centered representative a + b tau with b in [-1/2, 1/2); the metric
  // factor exp(-pi y^2 / Im tau) makes the value coset-independent.
  const double b = z.b() >= 0.5 ? z.b() - 1.0 : z.b();
  const Complex z0 = z.a() + b * tau.value();
  const double y = b * tau.im();
  const ThetaSums s = theta_sums(z0, tau, tol);
  return 0.25 * std::log(tau.im()) - kPi * y * y / tau.im() +
         std::log(std::abs(s.value));
}

double norm_theta(const TorusPoint& z, const TauPoint& tau,
                  const SeriesTolerance& tol) {
  return std::exp(log_norm_theta(z, tau, tol));
}

ModularInvariants invariants(const TauPoint& tau, const SeriesTolerance& tol) {
  const TauPoint reduced = reduce_tau(tau).tau;
  const double log_t = std::log(reduced.im());
  const double log_eta = 0.25 * log_t + log_abs_eta(reduced, tol);
  const double log_delta = 6.0 * log_t + log_abs_delta(reduced, tol);
  const double norm_eta = std::exp(log_eta);
  return ModularInvariants{
      reduced,
      norm_eta,
      std::exp(log_delta),
      1.0 / (2.0 * kPi * norm_eta * norm_eta),
      log_eta,
      log_delta,
  };
}

}  // namespace arakelov
