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

#include "arakelov/heights.hpp"

#include <cmath>
#include <numbers>

#include "arakelov/errors.hpp"
#include "arakelov/green.hpp"
#include "arakelov/summation.hpp"

namespace arakelov {
namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + ": argument must be positive");
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// sum_{Q in C, Q != 0} log G(Q, 0)
double kernel_log_green(const TauPoint& tau, const CyclicSubgroup& c,
                        const SeriesTolerance& tol) {
  CompensatedSum acc;
  for (const TorsionPoint& q : subgroup_points(c)) {
    if (!q.is_zero()) acc.add(green(tau, q, tol).log_value);
  }
  return acc.value();
}

}  // namespace

std::int64_t e_n(std::int64_t n) {
  require_positive(n, "e_n");
  std::int64_t out = 1;
  for (const auto& [p, r] : factorize(n)) out *= ipow(p, r - 1) * (p + 1);
  return out;
}

std::vector<LambdaTerm> lambda_terms(std::int64_t n) {
  require_positive(n, "lambda_n");
  std::vector<LambdaTerm> out;
  for (const auto& [p, r] : factorize(n)) {
    out.push_back({p, Rational::make(ipow(p, r) - 1, ipow(p, r - 1) * (p * p - 1))});
  }
  return out;
}

double lambda_n(std::int64_t n) {
  CompensatedSum acc;
  for (const auto& term : lambda_terms(n)) {
    acc.add(term.coefficient.to_double() * std::log(static_cast<double>(term.prime)));
  }
  return acc.value();
}

double t_expected(std::int64_t m) {
  require_positive(m, "t_expected");
  if (m == 1) return 0.0;
  const auto f = factorize(m);
  return f.size() == 1 ? std::log(static_cast<double>(f.front().prime)) : 0.0;
}

double t_numeric(const TauPoint& tau, std::int64_t m,
                 const SeriesTolerance& tol) {
  require_positive(m, "t_numeric");
  if (m == 1) return 0.0;
  CompensatedSum acc;
  for (const TorsionPoint& q : exact_order_points(m)) {
    acc.add(green(tau, q, tol).log_value);
  }
  return acc.value();
}

double telescoping_residual(const TauPoint& tau, const CyclicSubgroup& c,
                            const SeriesTolerance& tol) {
  const double log_delta = invariants(tau, tol).log_norm_delta;
  const Isogeny iso = quotient(tau, c);
  const double lhs =
      (log_delta - invariants(iso.target, tol).log_norm_delta) / 12.0;
  const double rhs = 0.5 * std::log(static_cast<double>(c.order())) -
                     kernel_log_green(tau, c, tol);
  return std::abs(lhs - rhs);
}

AverageHeightReport average_green_over_cyclic(const TauPoint& tau,
                                              std::int64_t n,
                                              const SeriesTolerance& tol) {
  require_positive(n, "average_green_over_cyclic");
  const double log_delta = invariants(tau, tol).log_norm_delta;
  CompensatedSum green_sum;
  CompensatedSum delta_sum;
  const auto subgroups = cyclic_subgroups(n);
  for (const CyclicSubgroup& c : subgroups) {
    green_sum.add(kernel_log_green(tau, c, tol));
    const Isogeny iso = quotient(tau, c);
    delta_sum.add((log_delta - invariants(iso.target, tol).log_norm_delta) / 12.0);
  }
  const double count = static_cast<double>(e_n(n));
  AverageHeightReport r{};
  r.n = n;
  r.lhs_green_avg = green_sum.value() / count;
  r.lambda_n = lambda_n(n);
  r.lhs_delta_avg = delta_sum.value() / count;
  r.predicted_delta = autissier_delta(n);
  r.residuals = {std::abs(r.lhs_green_avg - r.lambda_n),
                 std::abs(r.lhs_delta_avg - r.predicted_delta)};
  return r;
}

double faltings_height(const CurveHeightInput& input,
                       const SeriesTolerance& tol) {
  if (input.degree < 1) throw DomainError("faltings_height: degree must be positive");
  if (input.embeddings.empty()) {
    throw DomainError("faltings_height: at least one embedding is required");
  }
  const double log_two_pi_12 = 12.0 * std::log(2.0 * std::numbers::pi);
  CompensatedSum archimedean;
  for (const TauPoint& tau : input.embeddings) {
    archimedean.add(log_two_pi_12 + invariants(tau, tol).log_norm_delta);
  }
  return (input.log_norm_min_disc / 12.0 - archimedean.value() / 12.0) /
         static_cast<double>(input.degree);
}

double autissier_delta(std::int64_t n) {
  require_positive(n, "autissier_delta");
  return 0.5 * std::log(static_cast<double>(n)) - lambda_n(n);
}

}  // namespace arakelov
