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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commands.hpp"
#include "record.hpp"

namespace arakelov::cli {

enum class Level { quick, full };

struct VerifyConfig {
  Level level = Level::quick;
  std::uint64_t seed = 7;
  GlobalOptions options;
  // Replaces every check's tolerance; used as a negative control.
  std::optional<double> override_tolerance;
};

struct Check {
  std::string name;
  double residual;
  double tolerance;

  bool passed() const { return residual <= tolerance; }  // false for NaN
};

// Runs the identity checks. Output depends only on the config.
std::vector<Check> run_verify(const VerifyConfig& cfg);

// One "PASS|FAIL name residual tolerance" line per check plus a summary.
std::string render_checks(const std::vector<Check>& checks);

OutputRecord verify_record(const VerifyConfig& cfg, const std::vector<Check>& checks);

}  // namespace arakelov::cli
