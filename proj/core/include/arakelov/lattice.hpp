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

#include <complex>
#include <compare>
#include <cstdint>
#include <vector>

namespace arakelov {

using Complex = std::complex<double>;

// A point of the upper half plane; marks the torus C/(Z + tau Z).
class TauPoint {
 public:
  // Throws DomainError unless both parts are finite and im > 0.
  TauPoint(double re, double im);
  explicit TauPoint(Complex tau) : TauPoint(tau.real(), tau.imag()) {}

  double re() const { return re_; }
  double im() const { return im_; }
  Complex value() const { return {re_, im_}; }
  // q = exp(2 pi i tau)
  Complex nome() const;

  friend bool operator==(const TauPoint&, const TauPoint&) = default;

 private:
  double re_;
  double im_;
};

// Element of SL(2, Z) acting by tau -> (a tau + b) / (c tau + d).
struct Sl2z {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static constexpr Sl2z identity() { return {}; }
  static constexpr Sl2z translation(std::int64_t n) { return {1, n, 0, 1}; }
  static constexpr Sl2z inversion() { return {0, -1, 1, 0}; }

  Complex apply(Complex tau) const {
    return (static_cast<double>(a) * tau + static_cast<double>(b)) /
           (static_cast<double>(c) * tau + static_cast<double>(d));
  }
  // c tau + d, the factor by which the first period is rescaled.
  Complex automorphy(Complex tau) const {
    return static_cast<double>(c) * tau + static_cast<double>(d);
  }
  std::int64_t det() const { return a * d - b * c; }

  friend Sl2z operator*(const Sl2z& x, const Sl2z& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Sl2z&, const Sl2z&) = default;
};

struct Reduction {
  TauPoint tau;
  Sl2z matrix;  // tau = matrix.apply(original)
};

// Moves tau into the standard fundamental domain |Re| <= 1/2, |tau| >= 1.
// Boundary representatives are chosen with Re >= 0.
Reduction reduce_tau(const TauPoint& tau);
bool is_reduced(const TauPoint& tau);

// A point a + b tau of the torus in lattice coordinates, a, b in [0, 1).
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(double a, double b);

  static TorusPoint from_complex(Complex z, const TauPoint& tau);
  Complex to_complex(const TauPoint& tau) const;

  double a() const { return a_; }
  double b() const { return b_; }
  bool is_zero() const { return a_ == 0.0 && b_ == 0.0; }

  TorusPoint operator-() const { return {-a_, -b_}; }
  friend TorusPoint operator+(const TorusPoint& x, const TorusPoint& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend TorusPoint operator-(const TorusPoint& x, const TorusPoint& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

 private:
  double a_ = 0.0;
  double b_ = 0.0;
};

// Torsion point with exact rational lattice coordinates
// (a_num / den, b_num / den), stored in lowest terms with 0 <= num < den.
class TorsionPoint {
 public:
  TorsionPoint() = default;
  TorsionPoint(std::int64_t a_num, std::int64_t b_num, std::int64_t den);

  std::int64_t a_num() const { return a_num_; }
  std::int64_t b_num() const { return b_num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return a_num_ == 0 && b_num_ == 0; }
  // Exact order in the group C / Lambda; equals den in lowest terms.
  std::int64_t order() const { return den_; }

  TorusPoint to_real() const;

  TorsionPoint operator-() const { return {-a_num_, -b_num_, den_}; }
  friend TorsionPoint operator+(const TorsionPoint& x, const TorsionPoint& y);
  friend TorsionPoint operator-(const TorsionPoint& x, const TorsionPoint& y) {
    return x + (-y);
  }
  friend auto operator<=>(const TorsionPoint&, const TorsionPoint&) = default;

 private:
  std::int64_t a_num_ = 0;
  std::int64_t b_num_ = 0;
  std::int64_t den_ = 1;
};

// Lattice coordinates of a torus point after the marking changes by `m`.
// The new coordinates refer to the basis (c tau + d, a tau + b), rescaled so
// the first vector is 1.
TorusPoint transport(const TorusPoint& z, const Sl2z& m);
TorsionPoint transport(const TorsionPoint& z, const Sl2z& m);

// Cyclic subgroup of order N of the N-torsion, generated by (u/N, v/N).
// Canonical form: v is a positive divisor of N (v = N stands for 0) and u is
// the least residue among all generators with that second coordinate. Two
// subgroups are equal iff their canonical forms agree.
class CyclicSubgroup {
 public:
  // Throws DomainError if N < 1 or gcd(u, v, N) != 1.
  static CyclicSubgroup make(std::int64_t u, std::int64_t v, std::int64_t n);

  std::int64_t order() const { return order_; }
  std::int64_t u() const { return u_; }
  std::int64_t v() const { return v_; }
  TorsionPoint generator() const { return {u_, v_, order_}; }

  friend auto operator<=>(const CyclicSubgroup&,
                          const CyclicSubgroup&) = default;

 private:
  CyclicSubgroup(std::int64_t u, std::int64_t v, std::int64_t n)
      : order_(n), u_(u), v_(v) {}

  std::int64_t order_;
  std::int64_t u_;
  std::int64_t v_;
};

// All e_N cyclic subgroups of order N, ordered by (v, u).
std::vector<CyclicSubgroup> cyclic_subgroups(std::int64_t n);

// k * generator for k = 0..N-1, starting with zero.
std::vector<TorsionPoint> subgroup_points(const CyclicSubgroup& c);

// Points (a/M, b/M) with gcd(a, b, M) = 1.
std::vector<TorsionPoint> exact_order_points(std::int64_t m);

// All N^2 points of X[N].
std::vector<TorsionPoint> mult_by_n_kernel(std::int64_t n);

// An isogeny f(z) = scale * z from C/(Z + source Z) onto C/(Z + target Z).
struct Isogeny {
  TauPoint source;
  TauPoint target;
  std::int64_t degree;
  std::vector<TorsionPoint> kernel;
  Complex scale;

  // Image of a source point in target lattice coordinates.
  TorusPoint apply(const TorusPoint& z) const;
};

// Quotient of the source torus by a cyclic subgroup. The target marking is
// reduced to the fundamental domain.
Isogeny quotient(const TauPoint& tau, const CyclicSubgroup& c);

// Multiplication by N seen as the quotient by X[N] (degree N^2).
Isogeny multiplication_isogeny(const TauPoint& tau, std::int64_t n);

// |Im(conj(w1) w2)|
double covolume(Complex omega1, Complex omega2);

}  // namespace arakelov
