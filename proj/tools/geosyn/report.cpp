// Copyright 2026 The Geosyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "geosyn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace geosyn::cli {

namespace {

std::string short_number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

void RunReport::check_at_most(std::string check, double measured, double tolerance,
                              std::string note) {
  const bool pass = std::isfinite(measured) && measured <= tolerance;
  diagnostics.push_back({std::move(check), pass, measured, tolerance, std::move(note)});
}

void RunReport::check(std::string check, bool pass, double measured, double tolerance,
                      std::string note) {
  diagnostics.push_back({std::move(check), pass, measured, tolerance, std::move(note)});
}

void RunReport::fail(std::string check, std::string note) {
  diagnostics.push_back({std::move(check), false, NAN, NAN, std::move(note)});
}

bool RunReport::all_passed() const {
  return std::all_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.pass; });
}

std::string RunReport::render() const {
  std::string out = "command: " + command + "\n";
  for (const auto& [key, value] : inputs) out += "input " + key + ": " + value + "\n";
  for (const auto& path : outputs) out += "output: " + path + "\n";
  if (!diagnostics.empty()) {
    std::size_t width = 5;
    for (const auto& d : diagnostics) width = std::max(width, d.check.size());
    out += pad("check", width + 2) + pad("result", 8) + pad("measured", 14) +
           pad("tolerance", 14) + "note\n";
    for (const auto& d : diagnostics) {
      std::string line = pad(d.check, width + 2) + pad(d.pass ? "PASS" : "FAIL", 8) +
                         pad(std::isnan(d.measured) ? "-" : short_number(d.measured), 14) +
                         pad(std::isnan(d.tolerance) ? "-" : short_number(d.tolerance), 14) +
                         d.note;
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
  }
  out += std::string("status: ") + (all_passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace geosyn::cli
