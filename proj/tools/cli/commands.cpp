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

#include "commands.hpp"

#include <cmath>
#include <numbers>

#include "arakelov/green.hpp"
#include "arakelov/weierstrass.hpp"
#include "parse.hpp"

namespace arakelov::cli {

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

void complex_result(OutputRecord& r, const std::string& key, Complex z) {
  r.result(key + "_re", z.real());
  r.result(key + "_im", z.imag());
}

OutputRecord start(const char* command, const GlobalOptions& opt) {
  OutputRecord r;
  r.command = command;
  r.tolerance_used = opt.tol;
  return r;
}

}  // namespace

OutputRecord cmd_invariants(const std::string& raw_tau, const GlobalOptions& opt) {
  const TauPoint tau = parse_tau(raw_tau);
  const SeriesTolerance tol = opt.series();
  OutputRecord r = start("invariants", opt);
  r.input("tau", raw_tau);
  const ModularInvariants inv = invariants(tau, tol);
  complex_result(r, "reduced_tau", inv.reduced_tau.value());
  r.result("norm_eta", inv.norm_eta);
  r.result("norm_delta", inv.norm_delta);
  r.result("a_invariant", inv.a_invariant);
  r.result("log_norm_delta", inv.log_norm_delta);
  const double limit = adjunction_limit(tau, Complex(0.3, 0.4), tol);
  r.result("adjunction_limit", limit);
  r.residual("norm_delta_vs_norm_eta_24", rel(inv.norm_delta, std::pow(inv.norm_eta, 24)));
  r.residual("adjunction_vs_a_invariant", rel(limit, inv.a_invariant));
  return r;
}

OutputRecord cmd_green(const std::string& raw_tau, const std::string& raw_z, bool lattice_coords,
                       const GlobalOptions& opt) {
  const TauPoint tau = parse_tau(raw_tau);
  const TorusPoint z =
      lattice_coords ? parse_point(raw_z) : TorusPoint::from_complex(parse_complex(raw_z), tau);
  const SeriesTolerance tol = opt.series();
  OutputRecord r = start("green", opt);
  r.input("tau", raw_tau);
  r.input(lattice_coords ? "point" : "z", raw_z);
  const GreenValue g = green(tau, z, tol);
  r.result("a", z.a());
  r.result("b", z.b());
  r.result("value", g.value);
  r.result("log_value", g.log_value);
  if (!z.is_zero()) {
    r.residual("symmetry", std::abs(g.log_value - green(tau, -z, tol).log_value));
  }
  return r;
}

OutputRecord cmd_torsion_product(const std::string& raw_tau, std::int64_t n,
                                 const GlobalOptions& opt) {
  const TauPoint tau = parse_tau(raw_tau);
  OutputRecord r = start("torsion-product", opt);
  r.input("tau", raw_tau);
  r.input("n", std::to_string(n));
  const double prod = torsion_product(tau, n, opt.series());
  r.result("product", prod);
  r.result("expected", static_cast<double>(n));
  r.residual("relative_error", rel(prod, static_cast<double>(n)));
  return r;
}

OutputRecord cmd_energy(const std::string& raw_tau, const std::string& raw_subgroup,
                        const GlobalOptions& opt) {
  const TauPoint tau = parse_tau(raw_tau);
  const CyclicSubgroup c = parse_subgroup(raw_subgroup);
  const SeriesTolerance tol = opt.series();
  OutputRecord r = start("energy", opt);
  r.input("tau", raw_tau);
  r.input("subgroup", raw_subgroup);
  const Isogeny iso = quotient(tau, c);
  const EnergyComparison e = energy(iso, tol);
  const double via_a = energy_via_a(iso, tol);
  r.result("degree", static_cast<double>(iso.degree));
  complex_result(r, "target_tau", iso.target.value());
  r.result("product", e.product);
  r.result("predicted", e.predicted);
  r.result("predicted_via_a", via_a);
  r.residual("product_vs_predicted", rel(e.product, e.predicted));
  r.residual("eta_form_vs_a_form", rel(via_a, e.predicted));
  return r;
}

OutputRecord cmd_average(const std::string& raw_tau, std::int64_t n, const GlobalOptions& opt) {
  const TauPoint tau = parse_tau(raw_tau);
  OutputRecord r = start("average", opt);
  r.input("tau", raw_tau);
  r.input("n", std::to_string(n));
  const AverageHeightReport rep = average_green_over_cyclic(tau, n, opt.series());
  r.result("e_n", static_cast<double>(e_n(n)));
  r.result("lhs_green_avg", rep.lhs_green_avg);
  r.result("lambda_n", rep.lambda_n);
  r.result("lhs_delta_avg", rep.lhs_delta_avg);
  r.result("predicted_delta", rep.predicted_delta);
  r.residual("green_avg_vs_lambda", rep.residuals[0]);
  r.residual("delta_avg_vs_predicted", rep.residuals[1]);
  return r;
}

OutputRecord cmd_mean_integral(const std::string& raw_tau, const GlobalOptions& opt) {
  const TauPoint tau = parse_tau(raw_tau);
  OutputRecord r = start("mean-integral", opt);
  r.input("tau", raw_tau);
  r.input("grid", std::to_string(opt.grid));
  const double v = green_mean_integral(tau, opt.grid, opt.series());
  r.result("integral", v);
  r.residual("abs_integral", std::abs(v));
  return r;
}

OutputRecord cmd_weierstrass(const std::string& raw_tau, const GlobalOptions& opt) {
  const TauPoint tau = parse_tau(raw_tau);
  const SeriesTolerance tol = opt.series();
  OutputRecord r = start("weierstrass", opt);
  r.input("tau", raw_tau);
  const WeierstrassCurve curve = eisenstein(tau, tol);
  const RootTriple roots = half_period_roots(tau, tol);
  complex_result(r, "g2", curve.p());
  complex_result(r, "g3", curve.q());
  complex_result(r, "discriminant", curve.discriminant());
  complex_result(r, "alpha1", roots.alpha1);
  complex_result(r, "alpha2", roots.alpha2);
  complex_result(r, "alpha3", roots.alpha3);
  complex_result(r, "j", j_invariant(curve));

  const ThomaeResiduals th = thomae_residuals(tau, tol);
  r.residual("thomae_13", th.r13);
  r.residual("thomae_12", th.r12);
  r.residual("thomae_23", th.r23);
  const PeriodData unit{1.0, tau.value(), tau, 0};
  r.residual("discriminant_relation", discriminant_relation_residual(unit, curve, tol));
  const Complex d_roots = discriminant_from_roots(roots);
  r.residual("discriminant_via_roots",
             std::abs(d_roots - curve.discriminant()) / std::abs(curve.discriminant()));
  const TwoTorsionCheck two = two_torsion_green_check(tau, tol);
  r.residual("two_torsion_12", two.residuals[0]);
  r.residual("two_torsion_13", two.residuals[1]);
  r.residual("two_torsion_23", two.residuals[2]);
  return r;
}

OutputRecord cmd_periods(const std::string& raw_p, const std::string& raw_q,
                         const GlobalOptions& opt) {
  const WeierstrassCurve curve(parse_complex(raw_p), parse_complex(raw_q));
  const SeriesTolerance tol = opt.series();
  OutputRecord r = start("periods", opt);
  r.input("p", raw_p);
  r.input("q", raw_q);
  const PeriodData pd = periods_from_curve(curve, tol);
  const Reduction red = reduce_tau(pd.tau);
  complex_result(r, "omega1", pd.omega1);
  complex_result(r, "omega2", pd.omega2);
  complex_result(r, "tau", pd.tau.value());
  complex_result(r, "reduced_tau", red.tau.value());
  complex_result(r, "j", j_invariant(curve));
  r.result("agm_iterations", pd.agm_iterations);
  r.residual("discriminant_relation", discriminant_relation_residual(pd, curve, tol));
  return r;
}

OutputRecord cmd_faltings(const std::string& path, const GlobalOptions& opt) {
  const CurveHeightInput in = read_height_input(path);
  OutputRecord r = start("faltings", opt);
  r.input("input", path);
  r.input("degree", std::to_string(in.degree));
  r.input("log_norm_min_disc", format_number(in.log_norm_min_disc));
  for (std::size_t k = 0; k < in.embeddings.size(); ++k) {
    r.input("embedding_" + std::to_string(k), format_complex(in.embeddings[k].value()));
  }
  r.result("faltings_height", faltings_height(in, opt.series()));
  return r;
}

}  // namespace arakelov::cli
