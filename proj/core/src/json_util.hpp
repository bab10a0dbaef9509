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
#pragma once

// Helpers turning nlohmann::json lookups into ParseErrors with a field path.

#include <algorithm>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <json.hpp>

#include "geosyn/errors.hpp"

namespace geosyn::json_util {

inline nlohmann::json parse(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto end = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + std::ptrdiff_t(end), '\n');
    throw ParseError("line " + std::to_string(line), "malformed JSON");
  }
}

inline std::string join(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

inline const nlohmann::json& require(const nlohmann::json& obj, const std::string& key,
                                     const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(join(where, key), "missing required field");
  }
  return obj.at(key);
}

inline double number_at(const nlohmann::json& value, const std::string& where) {
  if (!value.is_number()) throw ParseError(where, "expected a number");
  return value.get<double>();
}

inline std::string string_at(const nlohmann::json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where, "expected a string");
  return value.get<std::string>();
}

inline Eigen::VectorXd vector_at(const nlohmann::json& value, const std::string& where,
                                 Eigen::Index expected = -1) {
  if (!value.is_array()) throw ParseError(where, "expected an array of numbers");
  if (expected >= 0 && Eigen::Index(value.size()) != expected) {
    throw ParseError(where, "expected " + std::to_string(expected) + " numbers");
  }
  Eigen::VectorXd out(Eigen::Index(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) {
    out[Eigen::Index(i)] = number_at(value[i], where + "[" + std::to_string(i) + "]");
  }
  return out;
}

inline nlohmann::json to_json(const Eigen::VectorXd& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

}  // namespace geosyn::json_util
