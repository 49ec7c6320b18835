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

#include "record.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "parse.hpp"

namespace arakelov::cli {

namespace {

bool same(double a, double b) {
  return (std::isnan(a) && std::isnan(b)) || a == b;
}

bool same(const std::vector<std::pair<std::string, double>>& x,
          const std::vector<std::pair<std::string, double>>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].first != y[i].first || !same(x[i].second, y[i].second)) return false;
  }
  return true;
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_number(double x) {
  const std::string s = format_number(x);
  return std::isfinite(x) ? s : json_string(s);
}

double number_from_json(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  const std::string s = v.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw UsageError("unexpected string '" + s + "' in a numeric field");
}

void write_numbers(std::string& out, const char* key,
                   const std::vector<std::pair<std::string, double>>& fields) {
  out += "  " + json_string(key) + ": {";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += json_string(fields[i].first) + ": " + json_number(fields[i].second);
  }
  out += fields.empty() ? "}" : "\n  }";
}

}  // namespace

bool operator==(const OutputRecord& x, const OutputRecord& y) {
  return x.command == y.command && x.inputs == y.inputs && same(x.results, y.results) &&
         same(x.residuals, y.residuals) && same(x.tolerance_used, y.tolerance_used);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json(const OutputRecord& r) {
  std::string out = "{\n  \"command\": " + json_string(r.command) + ",\n";
  out += "  \"inputs\": {";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += json_string(r.inputs[i].first) + ": " + json_string(r.inputs[i].second);
  }
  out += r.inputs.empty() ? "},\n" : "\n  },\n";
  write_numbers(out, "results", r.results);
  out += ",\n";
  write_numbers(out, "residuals", r.residuals);
  out += ",\n  \"tolerance_used\": " + json_number(r.tolerance_used) + "\n}\n";
  return out;
}

OutputRecord from_json(const std::string& text) {
  try {
    const auto doc = nlohmann::ordered_json::parse(text);
    OutputRecord r;
    r.command = doc.at("command").get<std::string>();
    for (const auto& [k, v] : doc.at("inputs").items()) r.input(k, v.get<std::string>());
    for (const auto& [k, v] : doc.at("results").items()) r.result(k, number_from_json(v));
    for (const auto& [k, v] : doc.at("residuals").items()) r.residual(k, number_from_json(v));
    r.tolerance_used = number_from_json(doc.at("tolerance_used"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed record: ") + e.what());
  }
}

std::string to_table(const OutputRecord& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", r.command);
  for (const auto& [k, v] : r.inputs) rows.emplace_back("input." + k, v);
  for (const auto& [k, v] : r.results) rows.emplace_back("result." + k, format_number(v));
  for (const auto& [k, v] : r.residuals) rows.emplace_back("residual." + k, format_number(v));
  rows.emplace_back("tolerance_used", format_number(r.tolerance_used));

  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::string out;
  for (const auto& [k, v] : rows) {
    out += k;
    out.append(width + 2 - k.size(), ' ');
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace arakelov::cli
