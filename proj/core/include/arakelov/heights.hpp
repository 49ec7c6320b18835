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
#include <cstdint>
#include <vector>

#include "arakelov/arith.hpp"
#include "arakelov/lattice.hpp"
#include "arakelov/modular.hpp"

namespace arakelov {

// Number of cyclic subgroups of order N: N prod_{p | N} (1 + 1/p).
std::int64_t e_n(std::int64_t n);

// lambda_N = sum over p^r || N of c_p log p with the exact rational
// coefficient c_p = (p^r - 1) / (p^(r-1) (p^2 - 1)).
struct LambdaTerm {
  std::int64_t prime;
  Rational coefficient;
};
std::vector<LambdaTerm> lambda_terms(std::int64_t n);
double lambda_n(std::int64_t n);

// Closed form of t(M): log p if M = p^r, otherwise 0 (t(1) = 0).
double t_expected(std::int64_t m);

// t(M) = sum over points Q of exact order M of log G(Q, 0).
double t_numeric(const TauPoint& tau, std::int64_t m,
                 const SeriesTolerance& tol = {});

struct AverageHeightReport {
  std::int64_t n;
  double lhs_green_avg;    // (1/e_N) sum_C sum_{Q in C, Q != 0} log G(Q, 0)
  double lambda_n;
  double lhs_delta_avg;    // (1/e_N) sum_C (log||D||(X) - log||D||(X^C)) / 12
  double predicted_delta;  // log(N)/2 - lambda_N
  std::array<double, 2> residuals;
};

AverageHeightReport average_green_over_cyclic(const TauPoint& tau,
                                              std::int64_t n,
                                              const SeriesTolerance& tol = {});

// Per-subgroup telescoping residual
// |(log||D||(X) - log||D||(X^C))/12 - (log(N)/2 - sum_{Q in C, Q != 0} log G(Q,0))|.
double telescoping_residual(const TauPoint& tau, const CyclicSubgroup& c,
                            const SeriesTolerance& tol = {});

struct CurveHeightInput {
  int degree;                      // [K : Q]
  double log_norm_min_disc;        // log |N_{K/Q}(Delta_min)|, nats
  std::vector<TauPoint> embeddings;  // one tau per complex embedding
};

// h_F = (log|N(Delta)| / 12 - sum_s log((2 pi)^12 ||Delta||(E_s)) / 12) / [K:Q]
double faltings_height(const CurveHeightInput& input,
                       const SeriesTolerance& tol = {});

// log(N)/2 - lambda_N, the average height increment over cyclic quotients.
double autissier_delta(std::int64_t n);

}  // namespace arakelov
