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

#include <cstdint>

#include "geosyn/report.hpp"
#include "geosyn/robot_model.hpp"

namespace geosyn::cli {

struct ValidationSettings {
  std::uint64_t seed = 0;
  double duration = 1.0;
  double step = 1e-3;
  double tol_bvp = 1e-8;
  int trials = 3;  ///< random instances per cheap property
};

/// Appends one diagnostic per property. Exceptions inside a property become
/// failed checks carrying the error text.
void run_validation(const RobotModel& model, const ValidationSettings& settings,
                    RunReport& report);

}  // namespace geosyn::cli
