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
#include <utility>
#include <vector>

namespace arakelov::cli {

// Result of one CLI command. Maps are kept as ordered vectors so both
// renderers list fields in the order the command produced them.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, double>> results;
  std::vector<std::pair<std::string, double>> residuals;
  double tolerance_used = 0.0;

  void input(std::string key, std::string value) {
    inputs.emplace_back(std::move(key), std::move(value));
  }
  void result(std::string key, double value) {
    results.emplace_back(std::move(key), value);
  }
  void residual(std::string key, double value) {
    residuals.emplace_back(std::move(key), value);
  }

  // NaN compares equal to NaN so that parse(serialize(r)) == r always holds.
  friend bool operator==(const OutputRecord& x, const OutputRecord& y);
};

// %.17g; non-finite values as "inf", "-inf", "nan".
std::string format_number(double x);

// Finite numbers are JSON numbers, non-finite ones the strings above.
std::string to_json(const OutputRecord& r);
OutputRecord from_json(const std::string& text);

// Two aligned columns, one field per line.
std::string to_table(const OutputRecord& r);

}  // namespace arakelov::cli
