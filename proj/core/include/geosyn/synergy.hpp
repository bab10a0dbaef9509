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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "geosyn/geodesic.hpp"
#include "geosyn/robot_model.hpp"
#include "geosyn/types.hpp"

namespace geosyn {

/// A joint coordination fully determined by where it starts and how fast it
/// leaves: executing it means shooting the geodesic from (base, velocity).
struct GeodesicSynergy {
  GeodesicSynergy() = default;
  GeodesicSynergy(std::string label, TangentVector velocity);

  const Configuration& base() const noexcept { return velocity.base; }

  std::string label;
  TangentVector velocity;
};

/// Tangent vectors at `base` whose Gram matrix under G(base) is the identity.
struct SynergyBasis {
  Configuration base;
  std::vector<TangentVector> vectors;
};

/// Σ w_i v_i for synergies sharing one base (exact equality required).
GeodesicSynergy combine_same_base(std::span<const GeodesicSynergy> synergies,
                                  std::span<const double> weights);

/// Transports every velocity to `target_base` along connecting geodesics, then
/// sums with the weights. A ConvergenceError names the synergy that failed.
GeodesicSynergy combine_at(const RobotModel& model,
                           std::span<const GeodesicSynergy> synergies,
                           std::span<const double> weights,
                           const Configuration& target_base,
                           double transport_duration = 1.0,
                           const ConnectOptions& options = {});

/// Gram-Schmidt of `seed` (columns) under <.,.>_G(base). Defaults to the
/// coordinate vectors. Throws InvalidArgumentError when a
/// pivot drops below 1e-12.
SynergyBasis orthonormal_basis(const RobotModel& model, const Configuration& base,
                               std::optional<Eigen::MatrixXd> seed = std::nullopt);

/// Weights w_i = <target, b_i>_G; Σ w_i b_i reconstructs target.
Eigen::VectorXd decompose(const RobotModel& model, const SynergyBasis& basis,
                          const TangentVector& target);

/// Σ w_i b_i at the basis base.
TangentVector reconstruct(const SynergyBasis& basis, const Eigen::VectorXd& weights);

GeodesicTrajectory execute(const RobotModel& model, const GeodesicSynergy& synergy,
                           double duration, double step = kDefaultStep);

/// JSON synergy set: {"synergies": [{"label", "base": [...], "velocity": [...]}]}.
std::vector<GeodesicSynergy> load_synergies(std::string_view text);
std::string dump_synergies(std::span<const GeodesicSynergy> synergies);

}  // namespace geosyn
