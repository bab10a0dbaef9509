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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "geosyn/geodesic.hpp"
#include "geosyn/robot_model.hpp"

namespace geosyn {

/// CSV header line `t,q1..qN,qd1..qdN,qdd1..qddN,energy` (no newline).
std::string trajectory_csv_header(Eigen::Index dof);

/// One row per sample, every value with 17 significant digits. The energy
/// column is the kinetic energy of that sample.
void write_trajectory_csv(std::ostream& out, const RobotModel& model,
                          const GeodesicTrajectory& traj);

/// Writes to a temporary sibling and renames, so a failed write never leaves
/// a partial file at `path`.
void save_trajectory_csv(const std::filesystem::path& path, const RobotModel& model,
                         const GeodesicTrajectory& traj);

/// Parses the CSV layout above. The trajectory energy is the first row's.
GeodesicTrajectory read_trajectory_csv(std::string_view text);

/// "%.17g" formatting shared by every text output; -0 prints as "0".
std::string format_double(double value);

}  // namespace geosyn
