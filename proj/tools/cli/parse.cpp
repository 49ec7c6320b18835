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

#include "parse.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "record.hpp"

namespace arakelov::cli {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("cannot parse '" + std::string(whole) + "' as a number");
  }
  return v;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("cannot parse '" + std::string(whole) + "' as an integer");
  }
  return v;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(',', start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw UsageError("empty complex literal");
  // from_chars rejects a leading '+'.
  std::string_view body = text;
  if (body.front() == '+') body.remove_prefix(1);
  if (body.back() != 'i') return {parse_real(body, text), 0.0};

  body.remove_suffix(1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (body.empty() || body == "-") throw UsageError("cannot parse '" + std::string(text) + "'");
    return {0.0, parse_real(body, text)};
  }
  std::string_view im = body.substr(split);
  if (im.front() == '+') im.remove_prefix(1);
  if (im.empty() || im == "-") {
    throw UsageError("imaginary part needs digits in '" + std::string(text) + "'");
  }
  return {parse_real(body.substr(0, split), text), parse_real(im, text)};
}

TauPoint parse_tau(std::string_view text) { return TauPoint(parse_complex(text)); }

CyclicSubgroup parse_subgroup(std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() != 3) throw UsageError("subgroup must be given as u,v,N");
  return CyclicSubgroup::make(parse_int(parts[0], text), parse_int(parts[1], text),
                              parse_int(parts[2], text));
}

TorusPoint parse_point(std::string_view text) {
  const auto parts = split_commas(text);
  if (parts.size() != 2) throw UsageError("point must be given as a,b");
  return TorusPoint(parse_real(parts[0], text), parse_real(parts[1], text));
}

CurveHeightInput parse_height_input(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("height input is not valid JSON: ") + e.what());
  }
  try {
    CurveHeightInput in;
    in.degree = doc.at("degree").get<int>();
    in.log_norm_min_disc = doc.at("log_norm_min_disc").get<double>();
    for (const auto& e : doc.at("embeddings")) {
      in.embeddings.emplace_back(e.at("re").get<double>(), e.at("im").get<double>());
    }
    return in;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("height input does not match the schema: ") + e.what());
  }
}

CurveHeightInput read_height_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_height_input(ss.str());
}

std::string format_complex(Complex z) {
  const std::string im = format_number(z.imag());
  const bool neg = !im.empty() && im.front() == '-';
  return format_number(z.real()) + (neg ? "" : "+") + im + "i";
}

}  // namespace arakelov::cli
