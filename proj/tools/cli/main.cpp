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

// arakelov: command-line front end for the torus invariants library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 numeric or domain error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "arakelov/errors.hpp"
#include "commands.hpp"
#include "parse.hpp"
#include "verify.hpp"

namespace {

using namespace arakelov::cli;

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kNumeric = 3;

void emit(const OutputRecord& r, const GlobalOptions& opt) {
  std::cout << (opt.json ? to_json(r) : to_table(r));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic invariants of complex tori: theta, eta, Green functions, isogenies."};
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_option("--tol", opt.tol, "relative tolerance for every series")->capture_default_str();
  app.add_option("--grid", opt.grid, "quadrature grid size M (M x M midpoints)")
      ->capture_default_str()
      ->check(CLI::Range(16, 1 << 14));
  app.add_flag("--json", opt.json, "emit JSON instead of a table");

  std::string tau, z, point, subgroup, p, q, input;
  std::int64_t n = 1;

  auto* inv = app.add_subcommand("invariants", "normalized eta, Delta and A(X)");
  inv->add_option("--tau", tau, "period ratio a+bi")->required();

  auto* grn = app.add_subcommand("green", "Arakelov-Green function G(0, z)");
  grn->add_option("--tau", tau)->required();
  auto* z_opt = grn->add_option("--z", z, "complex coordinate a+bi");
  auto* p_opt = grn->add_option("--point", point, "lattice coordinates a,b");
  z_opt->excludes(p_opt);
  grn->callback([&] {
    if (z.empty() && point.empty()) throw CLI::RequiredError("--z or --point");
  });

  auto* tor = app.add_subcommand("torsion-product", "product of G(0, P) over non-zero N-torsion");
  tor->add_option("--tau", tau)->required();
  tor->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* eng = app.add_subcommand("energy", "energy of the quotient isogeny by a cyclic subgroup");
  eng->add_option("--tau", tau)->required();
  eng->add_option("--subgroup", subgroup, "generator u,v,N of the kernel")->required();

  auto* avg = app.add_subcommand("average", "average Green sum over cyclic subgroups of order N");
  avg->add_option("--tau", tau)->required();
  avg->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* mean = app.add_subcommand("mean-integral", "midpoint quadrature of log G over the torus");
  mean->add_option("--tau", tau)->required();

  auto* wei = app.add_subcommand("weierstrass", "Eisenstein curve, roots and their identities");
  wei->add_option("--tau", tau)->required();

  auto* per = app.add_subcommand("periods", "periods of y^2 = 4x^3 - px - q by AGM");
  per->add_option("--p", p)->required();
  per->add_option("--q", q)->required();

  auto* fal = app.add_subcommand("faltings", "Faltings height from a JSON input file");
  fal->add_option("--input", input)->required()->check(CLI::ExistingFile);

  VerifyConfig vcfg;
  std::string level = "quick";
  std::optional<double> override_tol;
  auto* ver = app.add_subcommand("verify", "run the identity checks");
  ver->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  ver->add_option("--seed", vcfg.seed)->capture_default_str();
  ver->add_option("--override-tolerance", override_tol, "use this tolerance for every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*inv) emit(cmd_invariants(tau, opt), opt);
    if (*grn) emit(cmd_green(tau, z.empty() ? point : z, z.empty(), opt), opt);
    if (*tor) emit(cmd_torsion_product(tau, n, opt), opt);
    if (*eng) emit(cmd_energy(tau, subgroup, opt), opt);
    if (*avg) emit(cmd_average(tau, n, opt), opt);
    if (*mean) emit(cmd_mean_integral(tau, opt), opt);
    if (*wei) emit(cmd_weierstrass(tau, opt), opt);
    if (*per) emit(cmd_periods(p, q, opt), opt);
    if (*fal) emit(cmd_faltings(input, opt), opt);
    if (*ver) {
      vcfg.level = level == "full" ? Level::full : Level::quick;
      vcfg.options = opt;
      vcfg.override_tolerance = override_tol;
      const auto checks = run_verify(vcfg);
      if (opt.json) {
        std::cout << to_json(verify_record(vcfg, checks));
      } else {
        std::cout << render_checks(checks);
      }
      std::string failing;
      for (const Check& c : checks) {
        if (!c.passed()) failing += (failing.empty() ? "" : ", ") + c.name;
      }
      if (!failing.empty()) {
        std::cerr << "verify: failing checks: " << failing << "\n";
        return kVerifyFailed;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const arakelov::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  } catch (const arakelov::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
  return 0;
}
