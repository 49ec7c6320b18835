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

#include "arakelov/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "arakelov/errors.hpp"
#include "arakelov/green.hpp"

namespace arakelov {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr int kAgmIterationCap = 64;
// Accept an AGM period candidate when the recovered curve matches the input
// to this relative accuracy.
constexpr double kPeriodCheckTol = 1e-6;

#if defined(__SIZEOF_FLOAT128__)
__extension__ typedef __float128 Wide;
#else
typedef long double Wide;
#endif

struct WideComplex {
  Wide re;
  Wide im;
};

WideComplex widen(Complex z) { return {z.real(), z.imag()}; }

WideComplex mul(WideComplex x, WideComplex y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

// p^3 - 27 q^2 with the products formed in extended precision.
Complex exact_discriminant(Complex p, Complex q) {
  const WideComplex wp = widen(p);
  const WideComplex wq = widen(q);
  const WideComplex p3 = mul(mul(wp, wp), wp);
  const WideComplex q2 = mul(wq, wq);
  const Wide re = p3.re - Wide(27) * q2.re;
  const Wide im = p3.im - Wide(27) * q2.im;
  return {static_cast<double>(re), static_cast<double>(im)};
}

Complex cubic_value(const WeierstrassCurve& c, Complex x) {
  return (4.0 * x * x - c.p()) * x - c.q();
}

Complex newton_step(const WeierstrassCurve& c, Complex x) {
  const Complex slope = 12.0 * x * x - c.p();
  if (slope == Complex(0.0, 0.0)) return x;
  return x - cubic_value(c, x) / slope;
}

struct AgmResult {
  Complex mean;
  int iterations;
};

// AGM with the square root closer to the arithmetic mean at every step.
AgmResult optimal_agm(Complex a, Complex b) {
  for (int it = 1; it <= kAgmIterationCap; ++it) {
    const Complex mean = 0.5 * (a + b);
    Complex geo = std::sqrt(a * b);
    if (std::abs(mean - geo) > std::abs(mean + geo)) geo = -geo;
    const bool done = std::abs(mean - geo) <= 4.0 *
                          std::numeric_limits<double>::epsilon() *
                          std::abs(mean);
    a = mean;
    b = geo;
    if (done) return {0.5 * (a + b), it};
  }
  throw ConvergenceError("AGM did not converge within the iteration cap");
}

// Relative mismatch of two curves, scaled by the weight-homogeneous size of
// the coefficients so that p = 0 or q = 0 is handled.
double curve_mismatch(const WeierstrassCurve& x, const WeierstrassCurve& y) {
  const double size_p = std::max(std::abs(x.p()), std::pow(std::abs(x.q()), 2.0 / 3.0));
  const double size_q = std::max(std::abs(x.q()), std::pow(std::abs(x.p()), 1.5));
  return std::abs(x.p() - y.p()) / size_p + std::abs(x.q() - y.q()) / size_q;
}

double relative(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(Complex p, Complex q)
    : p_(p), q_(q), discriminant_(exact_discriminant(p, q)) {}

bool WeierstrassCurve::is_singular() const {
  return discriminant_ == Complex(0.0, 0.0) ||
         !std::isfinite(std::abs(discriminant_));
}

WeierstrassCurve WeierstrassCurve::rescaled(Complex lambda) const {
  const Complex l2 = lambda * lambda;
  const Complex l4 = l2 * l2;
  const Complex l6 = l4 * l2;
  return {p_ / l4, q_ / l6, discriminant_ / (l6 * l6)};
}

WeierstrassCurve eisenstein(const TauPoint& tau, const SeriesTolerance& tol) {
  const Complex q = tau.nome();
  Complex qn = 1.0;
  Complex s3 = 0.0;
  Complex s5 = 0.0;
  for (int n = 1; q != Complex(0.0, 0.0); ++n) {
    qn *= q;
    const double nd = static_cast<double>(n);
    const double n3 = nd * nd * nd;
    const double n5 = n3 * nd * nd;
    // The discriminant is O(q), so the cutoff is relative to |q|, not 1.
    if (504.0 * n5 * std::abs(qn) < 1e-2 * tol.rel_tol() * std::abs(q)) break;
    if (n > tol.max_terms()) {
      throw ConvergenceError("eisenstein: tolerance not reached; reduce tau first");
    }
    const Complex lambert = qn / (1.0 - qn);
    s3 += n3 * lambert;
    s5 += n5 * lambert;
  }
  const double pi4 = std::pow(kPi, 4);
  const double pi6 = std::pow(kPi, 6);
  const Complex g2 = (4.0 * pi4 / 3.0) * (1.0 + 240.0 * s3);
  const Complex g3 = (8.0 * pi6 / 27.0) * (1.0 - 504.0 * s5);
  // E4^3 - E6^2 with the constant terms cancelled symbolically.
  const Complex e4e6 = 720.0 * s3 + 172800.0 * s3 * s3 +
                       13824000.0 * s3 * s3 * s3 + 1008.0 * s5 -
                       254016.0 * s5 * s5;
  const Complex disc = (64.0 * pi6 * pi6 / 27.0) * e4e6;
  return {g2, g3, disc};
}

RootTriple half_period_roots(const TauPoint& tau, const SeriesTolerance& tol) {
  const Complex t0 = theta(0.0, tau, tol);
  const Complex th = theta(0.5, tau, tol);
  const double pi2 = kPi * kPi;
  const Complex d13 = pi2 * std::pow(t0, 4);
  const Complex d12 = pi2 * std::pow(th, 4);
  const Complex a1 = (d12 + d13) / 3.0;
  return {a1, a1 - d12, a1 - d13};
}

RootTriple cubic_roots(const WeierstrassCurve& curve) {
  // x^3 + P x + Q = 0
  const Complex big_p = -curve.p() / 4.0;
  const Complex big_q = -curve.q() / 4.0;
  const Complex s = std::sqrt(big_q * big_q / 4.0 + big_p * big_p * big_p / 27.0);
  Complex cube = -big_q / 2.0 + s;
  const Complex other = -big_q / 2.0 - s;
  if (std::abs(other) > std::abs(cube)) cube = other;

  std::array<Complex, 3> r{};
  if (cube == Complex(0.0, 0.0)) {
    r = {0.0, 0.0, 0.0};
  } else {
    const Complex u = std::pow(cube, 1.0 / 3.0);
    const Complex omega = std::exp(2.0 * kPi * kI / 3.0);
    Complex uk = u;
    for (auto& root : r) {
      root = newton_step(curve, uk - big_p / (3.0 * uk));
      uk *= omega;
    }
  }

  // Isolated root first; split the close pair from the discriminant.
  const std::array<std::array<int, 3>, 3> layouts{{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}}};
  auto gap = [&](const std::array<int, 3>& l) { return std::abs(r[l[1]] - r[l[2]]); };
  const auto& best = *std::min_element(
      layouts.begin(), layouts.end(),
      [&](const auto& x, const auto& y) { return gap(x) < gap(y); });
  const Complex isolated = newton_step(curve, r[best[0]]);
  const Complex naive = r[best[1]] - r[best[2]];
  const Complex slope = 12.0 * isolated * isolated - curve.p();
  if (slope == Complex(0.0, 0.0) || curve.is_singular()) {
    return {isolated, r[best[1]], r[best[2]]};
  }
  Complex split = std::sqrt(curve.discriminant()) / slope;
  if (std::abs(split - naive) > std::abs(split + naive)) split = -split;
  const Complex pair_sum = -isolated;
  return {isolated, 0.5 * (pair_sum + split), 0.5 * (pair_sum - split)};
}

RootTriple labeled_cubic_roots(const TauPoint& tau, const SeriesTolerance& tol) {
  const RootTriple c = cubic_roots(eisenstein(tau, tol));
  const RootTriple t = half_period_roots(tau, tol);
  std::array<Complex, 3> r{c.alpha1, c.alpha2, c.alpha3};
  const std::array<Complex, 3> target{t.alpha1, t.alpha2, t.alpha3};
  std::array<int, 3> perm{0, 1, 2};
  std::array<int, 3> best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (int i = 0; i < 3; ++i) cost += std::abs(r[perm[i]] - target[i]);
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {r[best[0]], r[best[1]], r[best[2]]};
}

WeierstrassCurve curve_from_roots(const RootTriple& roots) {
  const auto& [a1, a2, a3] = roots;
  return {-4.0 * (a1 * a2 + a1 * a3 + a2 * a3), 4.0 * a1 * a2 * a3,
          discriminant_from_roots(roots)};
}

Complex discriminant_from_roots(const RootTriple& roots) {
  const Complex v = (roots.alpha1 - roots.alpha2) *
                    (roots.alpha1 - roots.alpha3) *
                    (roots.alpha2 - roots.alpha3);
  return 16.0 * v * v;
}

ThomaeResiduals thomae_residuals(const TauPoint& tau,
                                 const SeriesTolerance& tol) {
  const RootTriple r = labeled_cubic_roots(tau, tol);
  const double pi2 = kPi * kPi;
  const double t0 = std::abs(theta(0.0, tau, tol));
  const double th = std::abs(theta(0.5, tau, tol));
  const double tt = std::abs(theta(0.5 * tau.value(), tau, tol));
  const double rhs13 = pi2 * std::pow(t0, 4);
  const double rhs12 = pi2 * std::pow(th, 4);
  const double rhs23 = pi2 * std::exp(-kPi * tau.im()) * std::pow(tt, 4);
  return {relative(std::abs(r.alpha1 - r.alpha3), rhs13),
          relative(std::abs(r.alpha1 - r.alpha2), rhs12),
          relative(std::abs(r.alpha2 - r.alpha3), rhs23)};
}

double discriminant_relation_residual(const PeriodData& periods,
                                      const WeierstrassCurve& curve,
                                      const SeriesTolerance& tol) {
  const Complex expected =
      std::pow(2.0 * kPi / periods.omega1, 12) * delta(periods.tau, tol);
  return std::abs(curve.discriminant() - expected) / std::abs(expected);
}

TwoTorsionCheck two_torsion_green_check(const TauPoint& tau,
                                        const SeriesTolerance& tol) {
  const RootTriple r = labeled_cubic_roots(tau, tol);
  const std::array<Complex, 3> alpha{r.alpha1, r.alpha2, r.alpha3};
  const std::array<TorsionPoint, 3> half{TorsionPoint(1, 0, 2),
                                         TorsionPoint(1, 1, 2),
                                         TorsionPoint(0, 1, 2)};
  constexpr std::array<std::array<int, 3>, 3> pairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  TwoTorsionCheck out{};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j, l] = pairs[k];
    const double log_g = green(tau, half[j] - half[i], tol).log_value;
    out.green12[k] = std::exp(12.0 * log_g);
    const double dij = std::abs(alpha[i] - alpha[j]);
    out.formula[k] = 16.0 * dij * dij /
                     (std::abs(alpha[i] - alpha[l]) * std::abs(alpha[j] - alpha[l]));
    out.residuals[k] = relative(out.green12[k], out.formula[k]);
  }
  return out;
}

PeriodData periods_from_curve(const WeierstrassCurve& curve,
                              const SeriesTolerance& tol) {
  if (curve.is_singular()) {
    throw DomainError("periods_from_curve: singular cubic (discriminant 0)");
  }
  const RootTriple roots = cubic_roots(curve);
  std::array<Complex, 3> e{roots.alpha1, roots.alpha2, roots.alpha3};
  std::array<int, 3> perm{0, 1, 2};
  do {
    const Complex e1 = e[perm[0]];
    const Complex e2 = e[perm[1]];
    const Complex e3 = e[perm[2]];
    const Complex a = std::sqrt(e1 - e3);
    Complex b = std::sqrt(e1 - e2);
    if (std::abs(a - b) > std::abs(a + b)) b = -b;
    Complex c = std::sqrt(e2 - e3);
    if (std::abs(a - c) > std::abs(a + c)) c = -c;
    const AgmResult m1 = optimal_agm(a, b);
    const AgmResult m2 = optimal_agm(a, c);
    const Complex omega1 = kPi / m1.mean;
    Complex omega2 = kI * kPi / m2.mean;
    Complex ratio = omega2 / omega1;
    if (ratio.imag() < 0.0) {
      omega2 = -omega2;
      ratio = -ratio;
    }
    if (!(ratio.imag() > 0.0) || !std::isfinite(std::abs(ratio))) continue;

    const TauPoint tau(ratio);
    const Reduction red = reduce_tau(tau);
    const Complex first = static_cast<double>(red.matrix.c) * omega2 +
                          static_cast<double>(red.matrix.d) * omega1;
    const WeierstrassCurve recovered = eisenstein(red.tau, tol).rescaled(first);
    if (curve_mismatch(curve, recovered) < kPeriodCheckTol) {
      return {omega1, omega2, tau, std::max(m1.iterations, m2.iterations)};
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw ConvergenceError("periods_from_curve: no root ordering gave a period lattice");
}

Complex j_invariant(const WeierstrassCurve& curve) {
  const Complex p = curve.p();
  return 1728.0 * p * p * p / curve.discriminant();
}

}  // namespace arakelov
