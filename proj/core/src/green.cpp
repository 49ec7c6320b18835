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

#include "arakelov/green.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

#include "arakelov/errors.hpp"
#include "arakelov/summation.hpp"

namespace arakelov {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Reduced marking of a torus with its ||eta|| cached.
struct Frame {
  TauPoint tau;
  Sl2z matrix;
  double log_norm_eta;
};

Frame make_frame(const TauPoint& tau, const SeriesTolerance& tol) {
  const Reduction red = reduce_tau(tau);
  return {red.tau, red.matrix,
          0.25 * std::log(red.tau.im()) + log_abs_eta(red.tau, tol)};
}

// log G(0, z) with z already in the frame's lattice coordinates.
double log_green_in_frame(const Frame& frame, const TorusPoint& z,
                          const SeriesTolerance& tol) {
  const TorusPoint shifted = z + TorusPoint(0.5, 0.5);
  return log_norm_theta(shifted, frame.tau, tol) - frame.log_norm_eta;
}

GreenValue from_log(double log_value) {
  return {std::exp(log_value), log_value};
}

}  // namespace

GreenValue green(const TauPoint& tau, const TorusPoint& z,
                 const SeriesTolerance& tol) {
  if (z.is_zero()) return {0.0, kNegInf};
  const Frame frame = make_frame(tau, tol);
  return from_log(log_green_in_frame(frame, transport(z, frame.matrix), tol));
}

GreenValue green(const TauPoint& tau, const TorsionPoint& z,
                 const SeriesTolerance& tol) {
  if (z.is_zero()) return {0.0, kNegInf};
  const Frame frame = make_frame(tau, tol);
  const TorusPoint moved = transport(z, frame.matrix).to_real();
  return from_log(log_green_in_frame(frame, moved, tol));
}

GreenValue green(const TauPoint& tau, const TorusPoint& p, const TorusPoint& q,
                 const SeriesTolerance& tol) {
  return green(tau, q - p, tol);
}

double green_projection_check(const Isogeny& isogeny, const TorusPoint& w,
                              const TorusPoint& z, const SeriesTolerance& tol) {
  const TorusPoint image = isogeny.apply(z);
  const double rhs = green(isogeny.target, image - w, tol).log_value;

  const Complex w_source = w.to_complex(isogeny.target) / isogeny.scale;
  const TorusPoint base = TorusPoint::from_complex(w_source, isogeny.source);
  const Frame frame = make_frame(isogeny.source, tol);
  CompensatedSum lhs;
  for (const TorsionPoint& k : isogeny.kernel) {
    const TorusPoint q = base + k.to_real();
    const TorusPoint diff = transport(z - q, frame.matrix);
    const double term =
        diff.is_zero() ? kNegInf : log_green_in_frame(frame, diff, tol);
    if (!std::isfinite(term)) {
      throw DomainError("green_projection_check: z lies in the fiber over w");
    }
    lhs.add(term);
  }
  if (!std::isfinite(rhs)) {
    throw DomainError("green_projection_check: f(z) coincides with w");
  }
  return std::abs(lhs.value() - rhs);
}

double torsion_product(const TauPoint& tau, std::int64_t n,
                       const SeriesTolerance& tol) {
  if (n < 1) throw DomainError("torsion_product: N must be positive");
  const Frame frame = make_frame(tau, tol);
  CompensatedSum acc;
  for (const TorsionPoint& p : mult_by_n_kernel(n)) {
    if (p.is_zero()) continue;
    acc.add(log_green_in_frame(frame, transport(p, frame.matrix).to_real(),
                               tol));
  }
  return std::exp(acc.value());
}

EnergyComparison energy(const Isogeny& isogeny, const SeriesTolerance& tol) {
  const Frame frame = make_frame(isogeny.source, tol);
  CompensatedSum acc;
  for (const TorsionPoint& p : isogeny.kernel) {
    if (p.is_zero()) continue;
    acc.add(log_green_in_frame(frame, transport(p, frame.matrix).to_real(),
                               tol));
  }
  const double log_eta_source = invariants(isogeny.source, tol).log_norm_eta;
  const double log_eta_target = invariants(isogeny.target, tol).log_norm_eta;
  const double predicted =
      std::sqrt(static_cast<double>(isogeny.degree)) *
      std::exp(2.0 * (log_eta_target - log_eta_source));
  return {std::exp(acc.value()), predicted};
}

double energy_via_a(const Isogeny& isogeny, const SeriesTolerance& tol) {
  return std::sqrt(static_cast<double>(isogeny.degree)) *
         invariants(isogeny.source, tol).a_invariant /
         invariants(isogeny.target, tol).a_invariant;
}

double adjunction_limit(const TauPoint& tau, Complex direction,
                        const SeriesTolerance& tol) {
  if (direction == Complex(0.0, 0.0)) {
    throw DomainError("adjunction_limit: direction must be non-zero");
  }
  const Frame frame = make_frame(tau, tol);
  auto ratio = [&](double t) {
    const Complex z = t * direction;
    const TorusPoint p = TorusPoint::from_complex(z, frame.tau);
    return std::exp(std::log(std::abs(z)) - log_green_in_frame(frame, p, tol));
  };
  constexpr double h = 1e-2;
  const double f0 = ratio(h);
  const double f1 = ratio(h / 2.0);
  const double f2 = ratio(h / 4.0);
  // Error expansion in even powers of t.
  const double r0 = (4.0 * f1 - f0) / 3.0;
  const double r1 = (4.0 * f2 - f1) / 3.0;
  const double limit = (16.0 * r1 - r0) / 15.0;
  return limit / std::sqrt(frame.tau.im());
}

double a_invariant_adjunction_check(const TauPoint& tau,
                                    const SeriesTolerance& tol) {
  const double a = invariants(tau, tol).a_invariant;
  return std::abs(adjunction_limit(tau, Complex(0.3, 0.4), tol) - a) / a;
}

double green_mean_integral(const TauPoint& tau, int grid,
                           const SeriesTolerance& tol) {
  if (grid < 16) throw DomainError("green_mean_integral: grid must be >= 16");
  const Frame frame = make_frame(tau, tol);
  const double m = static_cast<double>(grid);
  std::vector<double> rows(static_cast<std::size_t>(grid), 0.0);

  const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u,
                                      static_cast<unsigned>(grid));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int i = static_cast<int>(w); i < grid;
               i += static_cast<int>(workers)) {
            const double a = (i + 0.5) / m;
            CompensatedSum row;
            for (int j = 0; j < grid; ++j) {
              row.add(log_green_in_frame(frame, TorusPoint(a, (j + 0.5) / m),
                                         tol));
            }
            rows[static_cast<std::size_t>(i)] = row.value();
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return compensated_sum(rows) / (m * m);
}

}  // namespace arakelov
