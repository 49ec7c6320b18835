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

#include <string>

#include "arakelov/heights.hpp"
#include "arakelov/lattice.hpp"
#include "arakelov/modular.hpp"
#include "record.hpp"

namespace arakelov::cli {

struct GlobalOptions {
  double tol = 1e-12;
  int grid = 512;
  bool json = false;

  SeriesTolerance series() const { return SeriesTolerance(tol); }
};

// Each command echoes its inputs as given on the command line (`raw_*`) and
// fills the record from the library. None of them print.
OutputRecord cmd_invariants(const std::string& raw_tau, const GlobalOptions& opt);
OutputRecord cmd_green(const std::string& raw_tau, const std::string& raw_z, bool lattice_coords,
                       const GlobalOptions& opt);
OutputRecord cmd_torsion_product(const std::string& raw_tau, std::int64_t n,
                                 const GlobalOptions& opt);
OutputRecord cmd_energy(const std::string& raw_tau, const std::string& raw_subgroup,
                        const GlobalOptions& opt);
OutputRecord cmd_average(const std::string& raw_tau, std::int64_t n, const GlobalOptions& opt);
OutputRecord cmd_mean_integral(const std::string& raw_tau, const GlobalOptions& opt);
OutputRecord cmd_weierstrass(const std::string& raw_tau, const GlobalOptions& opt);
OutputRecord cmd_periods(const std::string& raw_p, const std::string& raw_q,
                         const GlobalOptions& opt);
OutputRecord cmd_faltings(const std::string& path, const GlobalOptions& opt);

}  // namespace arakelov::cli
