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

#include <string>

#include "geosyn/geodesic.hpp"
#include "geosyn/robot_model.hpp"

namespace geosyn::cli {

/// Joint-space plot of a 2-DoF model: both paths plus metric ellipses on a
/// grid x grid lattice. Each ellipse is aligned with the eigenvectors of G
/// (major axis along the high-energy direction) and its area is proportional
/// to det(G).
std::string render_comparison_svg(const RobotModel& model,
                                  const GeodesicTrajectory& geodesic,
                                  const GeodesicTrajectory& straight, int grid);

}  // namespace geosyn::cli
