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

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "arakelov/arakelov.hpp"

namespace arakelov::cli {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

struct Sizes {
  int sampled_taus;
  std::int64_t max_n;
  int projection_instances;
  int agm_instances;
  std::int64_t count_limit;
  std::int64_t containment_limit;
  std::vector<int> quadrature_grids;
};

Sizes sizes_for(const VerifyConfig& cfg) {
  if (cfg.level == Level::quick) return {2, 6, 20, 10, 12, 8, {32, 64, 128}};
  std::vector<int> grids{64, 128, 256};
  if (cfg.options.grid > 256) grids.push_back(cfg.options.grid);
  return {3, 12, 100, 50, 30, 24, grids};
}

// Interior points of the fundamental domain drawn from a seeded generator.
class TauSampler {
 public:
  explicit TauSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  TauPoint reduced(double im_lo, double im_hi) {
    for (;;) {
      const double re = uniform(-0.49, 0.49);
      const double im = uniform(im_lo, im_hi);
      if (re * re + im * im > 1.001) return TauPoint(re, im);
    }
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<TauPoint> tau_grid() {
  std::vector<TauPoint> out;
  for (double re : {-0.45, -0.2, 0.0, 0.2, 0.45}) {
    for (double im : {0.95, 1.8, 2.7, 3.9, 5.0}) out.emplace_back(re, im);
  }
  return out;
}

class Suite {
 public:
  explicit Suite(const VerifyConfig& cfg) : cfg_(cfg) {}

  void add(std::string name, double tolerance, const std::function<double()>& residual) {
    double r;
    try {
      r = residual();
    } catch (const std::exception&) {
      r = std::numeric_limits<double>::quiet_NaN();
    }
    checks_.push_back({std::move(name), r, cfg_.override_tolerance.value_or(tolerance)});
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  const VerifyConfig& cfg_;
  std::vector<Check> checks_;
};

template <typename T, typename F>
double max_over(const std::vector<T>& xs, F&& f) {
  double m = 0.0;
  for (const T& x : xs) m = std::max(m, static_cast<double>(f(x)));
  return m;
}

// Cyclic subgroups of order N counted as (#elements of order N) / phi(N).
std::int64_t count_by_orders(std::int64_t n) {
  std::int64_t elements = 0;
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      if (std::gcd(std::gcd(a, b), n) == 1) ++elements;
    }
  }
  std::int64_t phi = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++phi;
  }
  return elements / phi;
}

}  // namespace

std::vector<Check> run_verify(const VerifyConfig& cfg) {
  const Sizes sz = sizes_for(cfg);
  const SeriesTolerance tol = cfg.options.series();
  TauSampler rng(cfg.seed);
  std::vector<TauPoint> taus{TauPoint(0.0, 1.0)};
  for (int k = 0; k < sz.sampled_taus; ++k) taus.push_back(rng.reduced(0.9, 2.5));
  const std::vector<TauPoint> grid = tau_grid();
  std::vector<std::int64_t> orders(static_cast<std::size_t>(sz.max_n));
  std::iota(orders.begin(), orders.end(), 1);

  Suite s(cfg);

  s.add("cusp_form_theta_constants", 1e-9, [&] {
    return max_over(grid, [&](const TauPoint& t) {
      const Complex v = t.value();
      const Complex lhs = std::pow(std::exp(kPi * kI * v / 4.0) * theta(0.0, t, tol) *
                                       theta(0.5, t, tol) * theta(v / 2.0, t, tol), 8);
      return rel(lhs, 256.0 * delta(t, tol));
    });
  });
  s.add("cusp_form_theta_derivative", 1e-9, [&] {
    return max_over(grid, [&](const TauPoint& t) {
      const Complex v = t.value();
      const Complex lhs = std::pow(std::exp(kPi * kI * v / 4.0) * theta_dz((1.0 + v) / 2.0, t, tol), 8);
      return rel(lhs, std::pow(2.0 * kPi, 8) * delta(t, tol));
    });
  });
  s.add("eta_24_vs_delta", 1e-10, [&] {
    return max_over(grid, [&](const TauPoint& t) { return rel(std::pow(eta(t, tol), 24), delta(t, tol)); });
  });
  s.add("norm_eta_modular_invariance", 1e-9, [&] {
    return max_over(taus, [&](const TauPoint& t) {
      const TauPoint inv(-1.0 / t.value());
      const TauPoint shifted(t.re() + 1.0, t.im());
      const double base = std::pow(t.im(), 0.25) * std::abs(eta(t, tol));
      const double a = std::pow(inv.im(), 0.25) * std::abs(eta(inv, tol));
      const double b = std::pow(shifted.im(), 0.25) * std::abs(eta(shifted, tol));
      return std::max(std::abs(a / base - 1.0), std::abs(b / base - 1.0));
    });
  });
  s.add("green_zero_at_origin", 0.0, [&] { return green(taus.back(), TorusPoint(0.0, 0.0), tol).value; });
  s.add("green_symmetry", 1e-10, [&] {
    double m = 0.0;
    for (int k = 0; k < 200; ++k) {
      const TauPoint t(rng.uniform(-2.0, 2.0), rng.uniform(0.2, 3.0));
      const TorusPoint z(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
      m = std::max(m, std::abs(green(t, z, tol).log_value - green(t, -z, tol).log_value));
    }
    return m;
  });
  s.add("green_half_period_product", 1e-9, [&] {
    return max_over(taus, [&](const TauPoint& t) {
      const double prod = green(t, TorsionPoint(1, 0, 2), tol).value *
                          green(t, TorsionPoint(0, 1, 2), tol).value *
                          green(t, TorsionPoint(1, 1, 2), tol).value;
      return std::abs(prod / 2.0 - 1.0);
    });
  });
  s.add("torsion_product", 1e-8, [&] {
    return max_over(taus, [&](const TauPoint& t) {
      return max_over(orders, [&](std::int64_t n) {
        return std::abs(torsion_product(t, n, tol) / static_cast<double>(n) - 1.0);
      });
    });
  });
  double energy_eta = 0.0, energy_a = 0.0;
  for (const TauPoint& t : taus) {
    for (std::int64_t n : orders) {
      for (const CyclicSubgroup& c : cyclic_subgroups(n)) {
        const Isogeny iso = quotient(t, c);
        const EnergyComparison e = energy(iso, tol);
        energy_eta = std::max(energy_eta, std::abs(e.product / e.predicted - 1.0));
        energy_a = std::max(energy_a, std::abs(energy_via_a(iso, tol) / e.predicted - 1.0));
      }
    }
  }
  s.add("isogeny_energy", 1e-8, [&] { return energy_eta; });
  s.add("isogeny_energy_a_form", 1e-12, [&] { return energy_a; });
  s.add("projection_formula", 1e-8, [&] {
    double m = 0.0;
    for (int k = 0; k < sz.projection_instances; ++k) {
      const TauPoint t = rng.reduced(0.9, 2.5);
      const std::int64_t n = 1 + static_cast<std::int64_t>(rng.below(8));
      const auto subs = cyclic_subgroups(n);
      const Isogeny iso = quotient(t, subs[rng.below(subs.size())]);
      const TorusPoint w(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
      const TorusPoint z(rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0));
      m = std::max(m, green_projection_check(iso, w, z, tol));
    }
    return m;
  });
  double avg_green = 0.0, avg_delta = 0.0;
  for (const TauPoint& t : taus) {
    for (std::int64_t n : orders) {
      const AverageHeightReport r = average_green_over_cyclic(t, n, tol);
      avg_green = std::max(avg_green, r.residuals[0]);
      avg_delta = std::max(avg_delta, r.residuals[1]);
    }
  }
  s.add("average_green_vs_lambda", 1e-7, [&] { return avg_green; });
  s.add("average_delta_vs_predicted", 1e-7, [&] { return avg_delta; });
  s.add("telescoping_per_subgroup", 1e-8, [&] {
    double m = 0.0;
    for (std::int64_t n : orders) {
      for (const CyclicSubgroup& c : cyclic_subgroups(n)) m = std::max(m, telescoping_residual(taus[1], c, tol));
    }
    return m;
  });
  s.add("t_numeric_vs_closed_form", 1e-8, [&] {
    return max_over(taus, [&](const TauPoint& t) {
      return max_over(orders, [&](std::int64_t m) { return std::abs(t_numeric(t, m, tol) - t_expected(m)); });
    });
  });
  s.add("t_moebius_consistency", 1e-12, [&] {
    double m = 0.0;
    for (std::int64_t n = 1; n <= 60; ++n) {
      double sum = 0.0;
      for (std::int64_t d : divisors(n)) sum += t_expected(d);
      m = std::max(m, std::abs(sum - std::log(static_cast<double>(n))));
    }
    return m;
  });
  s.add("thomae", 1e-9, [&] {
    return max_over(grid, [&](const TauPoint& t) {
      const ThomaeResiduals r = thomae_residuals(t, tol);
      return std::max({r.r13, r.r12, r.r23});
    });
  });
  s.add("discriminant_relation", 1e-9, [&] {
    return max_over(grid, [&](const TauPoint& t) {
      return discriminant_relation_residual({1.0, t.value(), t, 0}, eisenstein(t, tol), tol);
    });
  });
  s.add("discriminant_via_roots", 1e-9, [&] {
    return max_over(grid, [&](const TauPoint& t) {
      return rel(discriminant_from_roots(half_period_roots(t, tol)), eisenstein(t, tol).discriminant());
    });
  });
  s.add("two_torsion_green", 1e-8, [&] {
    return max_over(grid, [&](const TauPoint& t) {
      const TwoTorsionCheck c = two_torsion_green_check(t, tol);
      return *std::max_element(c.residuals.begin(), c.residuals.end());
    });
  });
  s.add("two_torsion_product", 1e-9, [&] {
    return max_over(grid, [&](const TauPoint& t) {
      const TwoTorsionCheck c = two_torsion_green_check(t, tol);
      const double lhs = c.green12[0] * c.green12[1] * c.green12[2];
      const double rhs = c.formula[0] * c.formula[1] * c.formula[2];
      return std::max(std::abs(lhs / 4096.0 - 1.0), std::abs(rhs / 4096.0 - 1.0));
    });
  });
  const std::vector<TauPoint> quad_taus{TauPoint(0.0, 1.0), TauPoint(0.0, 3.0), TauPoint(0.5, 1.2)};
  std::vector<std::vector<double>> quad(quad_taus.size());
  for (std::size_t k = 0; k < quad_taus.size(); ++k) {
    for (int m : sz.quadrature_grids) quad[k].push_back(green_mean_integral(quad_taus[k], m, tol));
  }
  s.add("mean_integral", 1e-3, [&] {
    double m = 0.0;
    for (const auto& row : quad) m = std::max(m, std::abs(row.back()));
    return m;
  });
  s.add("mean_integral_monotone", 0.0, [&] {
    double worst = 0.0;
    for (const auto& row : quad) {
      for (std::size_t k = 1; k < row.size(); ++k) {
        worst = std::max(worst, std::abs(row[k]) - std::abs(row[k - 1]));
      }
    }
    return worst;
  });
  s.add("adjunction_limit_vs_a", 1e-6, [&] {
    return max_over(taus, [&](const TauPoint& t) { return a_invariant_adjunction_check(t, tol); });
  });
  s.add("agm_round_trip", 1e-8, [&] {
    double m = 0.0;
    for (int k = 0; k < sz.agm_instances; ++k) {
      const TauPoint t = rng.reduced(0.9, 4.0);
      const PeriodData pd = periods_from_curve(eisenstein(t, tol), tol);
      m = std::max(m, std::abs(reduce_tau(pd.tau).tau.value() - t.value()));
    }
    return m;
  });
  s.add("cyclic_subgroup_counts", 0.0, [&] {
    double m = 0.0;
    for (std::int64_t n = 1; n <= sz.count_limit; ++n) {
      const auto listed = static_cast<std::int64_t>(cyclic_subgroups(n).size());
      m = std::max(m, static_cast<double>(std::abs(listed - count_by_orders(n)) +
                                          std::abs(listed - e_n(n))));
    }
    return m;
  });
  s.add("cyclic_containment", 0.0, [&] {
    double worst = 0.0;
    for (std::int64_t n = 1; n <= sz.containment_limit; ++n) {
      std::vector<std::set<TorsionPoint>> big;
      for (const CyclicSubgroup& c : cyclic_subgroups(n)) {
        const auto pts = subgroup_points(c);
        big.emplace_back(pts.begin(), pts.end());
      }
      for (std::int64_t m : divisors(n)) {
        for (const CyclicSubgroup& small : cyclic_subgroups(m)) {
          const TorsionPoint g = small.generator();
          const auto hits = std::count_if(big.begin(), big.end(), [&](const auto& b) { return b.count(g) > 0; });
          worst = std::max(worst, static_cast<double>(std::abs(hits * e_n(m) - e_n(n))));
        }
      }
    }
    return worst;
  });
  s.add("faltings_degree_homogeneity", 1e-15, [&] {
    return max_over(taus, [&](const TauPoint& t) {
      const double one = faltings_height({1, 3.5, {t}}, tol);
      const double two = faltings_height({2, 7.0, {t, t}}, tol);
      return std::abs(one - two);
    });
  });
  s.add("faltings_spot_value_i", 1e-10, [&] {
    // ||Delta||(i) = Gamma(1/4)^24 / (2^24 pi^18)
    const double norm_delta = std::pow(std::tgamma(0.25), 24) / (std::pow(2.0, 24) * std::pow(kPi, 18));
    const double expected = -std::log(std::pow(2.0 * kPi, 12) * norm_delta) / 12.0;
    return std::abs(faltings_height({1, 0.0, {TauPoint(0.0, 1.0)}}, tol) - expected);
  });
  return s.take();
}

std::string render_checks(const std::vector<Check>& checks) {
  std::size_t width = 0;
  for (const Check& c : checks) width = std::max(width, c.name.size());
  std::string out;
  std::size_t failed = 0;
  for (const Check& c : checks) {
    out += c.passed() ? "PASS  " : "FAIL  ";
    out += c.name;
    out.append(width + 2 - c.name.size(), ' ');
    out += "residual=" + format_number(c.residual) + "  tolerance=" + format_number(c.tolerance) + "\n";
    if (!c.passed()) ++failed;
  }
  out += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed\n";
  return out;
}

OutputRecord verify_record(const VerifyConfig& cfg, const std::vector<Check>& checks) {
  OutputRecord r;
  r.command = "verify";
  r.tolerance_used = cfg.options.tol;
  r.input("level", cfg.level == Level::quick ? "quick" : "full");
  r.input("seed", std::to_string(cfg.seed));
  if (cfg.override_tolerance) r.input("override_tolerance", format_number(*cfg.override_tolerance));
  std::size_t passed = 0;
  for (const Check& c : checks) {
    r.residual(c.name, c.residual);
    if (c.passed()) ++passed;
  }
  r.result("checks", static_cast<double>(checks.size()));
  r.result("passed", static_cast<double>(passed));
  return r;
}

}  // namespace arakelov::cli
