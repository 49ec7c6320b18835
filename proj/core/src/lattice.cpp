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

#include "arakelov/lattice.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "arakelov/arith.hpp"
#include "arakelov/errors.hpp"

namespace arakelov {
namespace {

// Points closer than this to the boundary of the fundamental domain are
// treated as lying on it.
constexpr double kBoundaryEps = 1e-13;
constexpr int kMaxReductionSteps = 10000;

double unit_interval(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;
  return r;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k < n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(k);
  }
  if (n == 1) out = {0};
  return out;
}

// Least u * j mod N over units j = 1 mod N/d.
std::int64_t minimal_first_coordinate(std::int64_t u, std::int64_t d,
                                      std::int64_t n,
                                      const std::vector<std::int64_t>& units) {
  const std::int64_t step = n / d;
  std::int64_t best = mod_floor(u, n);
  for (std::int64_t j : units) {
    if (mod_floor(j - 1, step) != 0) continue;
    best = std::min(best, mod_floor(u * j, n));
  }
  return best;
}

struct IntVec {
  std::int64_t x;
  std::int64_t y;
};

// Basis {(h, 0), (s, g)} with g, h > 0 and 0 <= s < h of the sublattice of
// Z^2 spanned by `gens`.
std::pair<IntVec, IntVec> hermite_basis(std::vector<IntVec> gens) {
  IntVec pivot{0, 0};
  std::int64_t h = 0;
  for (IntVec v : gens) {
    while (v.y != 0) {
      if (pivot.y == 0 || std::abs(v.y) < std::abs(pivot.y)) std::swap(pivot, v);
      if (v.y == 0) break;
      const std::int64_t q = v.y / pivot.y;
      v.x -= q * pivot.x;
      v.y -= q * pivot.y;
    }
    h = std::gcd(h, v.x);
  }
  if (pivot.y < 0) pivot = {-pivot.x, -pivot.y};
  assert(pivot.y > 0 && h > 0);
  pivot.x = mod_floor(pivot.x, h);
  return {{h, 0}, pivot};
}

Isogeny finish_isogeny(const TauPoint& source, Complex omega1, Complex omega2,
                       std::int64_t degree, std::vector<TorsionPoint> kernel) {
  const Complex raw = omega2 / omega1;
  if (!(raw.imag() > 0.0)) {
    throw std::logic_error("isogeny: target basis is not positively oriented");
  }
  const Reduction red = reduce_tau(TauPoint(raw));
  const Complex first = static_cast<double>(red.matrix.c) * omega2 +
                        static_cast<double>(red.matrix.d) * omega1;
  return Isogeny{source, red.tau, degree, std::move(kernel), 1.0 / first};
}

}  // namespace

TauPoint::TauPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw DomainError("tau must be finite");
  }
  if (!(im > 0.0)) {
    throw DomainError("tau must lie in the upper half plane (Im tau > 0), got " +
                      std::to_string(im));
  }
}

Complex TauPoint::nome() const {
  return std::exp(Complex(0.0, 2.0 * std::numbers::pi) * value());
}

Reduction reduce_tau(const TauPoint& tau) {
  Complex t = tau.value();
  Sl2z m = Sl2z::identity();
  int steps = 0;
  for (;; ++steps) {
    if (steps > kMaxReductionSteps) {
      throw ConvergenceError("reduce_tau: too many reduction steps");
    }
    const double shift = std::floor(t.real() + 0.5);
    if (shift != 0.0) {
      t -= shift;
      m = Sl2z::translation(-static_cast<std::int64_t>(shift)) * m;
    }
    if (std::norm(t) < 1.0 - 1e-15) {
      t = -1.0 / t;
      m = Sl2z::inversion() * m;
    } else {
      break;
    }
  }
  if (t.real() < -0.5 + kBoundaryEps) {
    t += 1.0;
    m = Sl2z::translation(1) * m;
  }
  if (std::abs(std::norm(t) - 1.0) <= kBoundaryEps && t.real() < 0.0) {
    t = -1.0 / t;
    m = Sl2z::inversion() * m;
  }
  return {TauPoint(t), m};
}

bool is_reduced(const TauPoint& tau) {
  return std::abs(tau.re()) <= 0.5 + kBoundaryEps &&
         std::norm(tau.value()) >= 1.0 - kBoundaryEps;
}

TorusPoint::TorusPoint(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("torus point coordinates must be finite");
  }
  a_ = unit_interval(a);
  b_ = unit_interval(b);
}

TorusPoint TorusPoint::from_complex(Complex z, const TauPoint& tau) {
  const double b = z.imag() / tau.im();
  const double a = z.real() - b * tau.re();
  return {a, b};
}

Complex TorusPoint::to_complex(const TauPoint& tau) const {
  return a_ + b_ * tau.value();
}

TorsionPoint::TorsionPoint(std::int64_t a_num, std::int64_t b_num,
                           std::int64_t den) {
  if (den < 1) throw DomainError("torsion point denominator must be positive");
  a_num = mod_floor(a_num, den);
  b_num = mod_floor(b_num, den);
  const std::int64_t g = std::gcd(std::gcd(a_num, b_num), den);
  a_num_ = a_num / g;
  b_num_ = b_num / g;
  den_ = den / g;
}

TorusPoint TorsionPoint::to_real() const {
  const double d = static_cast<double>(den_);
  return {static_cast<double>(a_num_) / d, static_cast<double>(b_num_) / d};
}

TorsionPoint operator+(const TorsionPoint& x, const TorsionPoint& y) {
  const std::int64_t l = std::lcm(x.den_, y.den_);
  return {x.a_num_ * (l / x.den_) + y.a_num_ * (l / y.den_),
          x.b_num_ * (l / x.den_) + y.b_num_ * (l / y.den_), l};
}

TorusPoint transport(const TorusPoint& z, const Sl2z& m) {
  const double x = z.a();
  const double y = z.b();
  return {static_cast<double>(m.a) * x - static_cast<double>(m.b) * y,
          -static_cast<double>(m.c) * x + static_cast<double>(m.d) * y};
}

TorsionPoint transport(const TorsionPoint& z, const Sl2z& m) {
  const std::int64_t x = z.a_num();
  const std::int64_t y = z.b_num();
  return {m.a * x - m.b * y, -m.c * x + m.d * y, z.den()};
}

CyclicSubgroup CyclicSubgroup::make(std::int64_t u, std::int64_t v,
                                    std::int64_t n) {
  if (n < 1) throw DomainError("cyclic subgroup order must be positive");
  u = mod_floor(u, n);
  v = mod_floor(v, n);
  if (std::gcd(std::gcd(u, v), n) != 1) {
    throw DomainError("generator (" + std::to_string(u) + "," +
                      std::to_string(v) + ") does not have exact order " +
                      std::to_string(n));
  }
  if (n == 1) return {0, 1, 1};
  const std::int64_t d = std::gcd(v, n);
  const auto units = units_mod(n);
  // Some unit k carries v to d; it exists because v / d is a unit mod N / d.
  std::int64_t k = 0;
  for (std::int64_t j : units) {
    if (mod_floor(j * v, n) == mod_floor(d, n)) {
      k = j;
      break;
    }
  }
  const std::int64_t u1 = mod_floor(k * u, n);
  return {minimal_first_coordinate(u1, d, n, units), d, n};
}

std::vector<CyclicSubgroup> cyclic_subgroups(std::int64_t n) {
  if (n < 1) throw DomainError("cyclic_subgroups: N must be positive");
  if (n == 1) return {CyclicSubgroup::make(0, 1, 1)};
  const auto units = units_mod(n);
  std::vector<CyclicSubgroup> out;
  for (std::int64_t d : divisors(n)) {
    for (std::int64_t u = 0; u < n; ++u) {
      if (std::gcd(u, d) != 1) continue;
      if (minimal_first_coordinate(u, d, n, units) != u) continue;
      out.push_back(CyclicSubgroup::make(u, d, n));
    }
  }
  return out;
}

std::vector<TorsionPoint> subgroup_points(const CyclicSubgroup& c) {
  std::vector<TorsionPoint> out;
  out.reserve(static_cast<std::size_t>(c.order()));
  for (std::int64_t k = 0; k < c.order(); ++k) {
    out.emplace_back(k * c.u(), k * c.v(), c.order());
  }
  return out;
}

std::vector<TorsionPoint> exact_order_points(std::int64_t m) {
  if (m < 1) throw DomainError("exact_order_points: M must be positive");
  std::vector<TorsionPoint> out;
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = 0; b < m; ++b) {
      if (std::gcd(std::gcd(a, b), m) == 1) out.emplace_back(a, b, m);
    }
  }
  return out;
}

std::vector<TorsionPoint> mult_by_n_kernel(std::int64_t n) {
  if (n < 1) throw DomainError("mult_by_n_kernel: N must be positive");
  std::vector<TorsionPoint> out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) out.emplace_back(a, b, n);
  }
  return out;
}

TorusPoint Isogeny::apply(const TorusPoint& z) const {
  return TorusPoint::from_complex(scale * z.to_complex(source), target);
}

Isogeny quotient(const TauPoint& tau, const CyclicSubgroup& c) {
  const std::int64_t n = c.order();
  // Lattice coordinates scaled by N: Lambda' = <(N,0), (0,N), (u,v)> / N.
  const auto [first, second] =
      hermite_basis({{n, 0}, {0, n}, {c.u(), c.v()}});
  assert(first.x * second.y == n);
  const double scale = 1.0 / static_cast<double>(n);
  const Complex omega1 = static_cast<double>(first.x) * scale;
  const Complex omega2 = (static_cast<double>(second.x) +
                          static_cast<double>(second.y) * tau.value()) *
                         scale;
  return finish_isogeny(tau, omega1, omega2, n, subgroup_points(c));
}

Isogeny multiplication_isogeny(const TauPoint& tau, std::int64_t n) {
  if (n < 1) throw DomainError("multiplication_isogeny: N must be positive");
  const double inv = 1.0 / static_cast<double>(n);
  return finish_isogeny(tau, Complex(inv, 0.0), tau.value() * inv, n * n,
                        mult_by_n_kernel(n));
}

double covolume(Complex omega1, Complex omega2) {
  return std::abs((std::conj(omega1) * omega2).imag());
}

}  // namespace arakelov
