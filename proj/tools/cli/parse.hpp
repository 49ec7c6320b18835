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

#include <stdexcept>
#include <string>
#include <string_view>

#include "arakelov/heights.hpp"
#include "arakelov/lattice.hpp"

namespace arakelov::cli {

// Malformed flag values and input files. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "a+bi", "a-bi", "a" or "bi". No spaces.
Complex parse_complex(std::string_view text);

// Complex literal followed by the upper-half-plane check (DomainError).
TauPoint parse_tau(std::string_view text);

// "u,v,N"
CyclicSubgroup parse_subgroup(std::string_view text);

// "a,b" in lattice coordinates.
TorusPoint parse_point(std::string_view text);

// {"degree": int, "log_norm_min_disc": float,
//  "embeddings": [{"re": float, "im": float}, ...]}
CurveHeightInput parse_height_input(const std::string& json_text);
CurveHeightInput read_height_input(const std::string& path);

// "a+bi" with both parts at 17 significant digits.
std::string format_complex(Complex z);

}  // namespace arakelov::cli
