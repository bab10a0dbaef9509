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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "geosyn/types.hpp"

namespace geosyn {

/// Proper rigid motion. `rotation` holds the child frame's axes expressed in
/// the parent frame and `translation` the child origin in the parent frame.
struct RigidTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static RigidTransform Identity() { return {}; }
  /// Fixed-axis roll/pitch/yaw, R = Rz(yaw) * Ry(pitch) * Rx(roll).
  static RigidTransform FromXyzRpy(const Eigen::Vector3d& xyz,
                                   const Eigen::Vector3d& rpy);

  Eigen::Vector3d operator*(const Eigen::Vector3d& point) const {
    return rotation * point + translation;
  }
  RigidTransform operator*(const RigidTransform& other) const {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }
  RigidTransform inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }
};

enum class JointKind { kRevolute, kPrismatic };

struct JointLimits {
  double lower = 0.0;
  double upper = 0.0;
};

/// Joint i moves link i relative to link i-1. `origin` places the joint frame
/// in the parent link frame; `axis` is expressed in that joint frame, and the
/// child link frame coincides with the joint frame at zero joint value.
struct Joint {
  std::string name;
  JointKind kind = JointKind::kRevolute;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  RigidTransform origin;
  std::optional<JointLimits> limits;
};

/// Inertial parameters of one rigid link, all in the link frame. `inertia`
/// is taken about the center of mass.
struct Link {
  std::string name;
  double mass = 0.0;
  Eigen::Vector3d com = Eigen::Vector3d::Zero();
  Eigen::Matrix3d inertia = Eigen::Matrix3d::Zero();
};

/// Fixed-base serial chain. links()[0] is the base; joints()[i] connects
/// links()[i] to links()[i + 1]. Immutable once constructed.
class RobotModel {
 public:
  /// Validates every structural and inertial invariant and throws ModelError
  /// naming the offending link or joint.
  RobotModel(std::string name, std::vector<Link> links, std::vector<Joint> joints);

  const std::string& name() const noexcept { return name_; }
  Eigen::Index dof() const noexcept { return static_cast<Eigen::Index>(joints_.size()); }
  const std::vector<Link>& links() const noexcept { return links_; }
  const std::vector<Joint>& joints() const noexcept { return joints_; }

  /// Throws DimensionError unless q has one entry per joint.
  void check_dimension(const Configuration& q) const;
  void check_dimension(const Eigen::VectorXd& q) const;

 private:
  std::string name_;
  std::vector<Link> links_;
  std::vector<Joint> joints_;
};

/// Parses the JSON robot description. Errors carry the line or field path.
RobotModel load_model(std::string_view text);

/// Imports the revolute/continuous/prismatic subset of a URDF document.
RobotModel import_urdf(std::string_view xml);

/// Reads a file and dispatches on extension: `.urdf`/`.xml` go through the
/// URDF importer, everything else through load_model.
RobotModel load_model_file(const std::filesystem::path& path);

/// Serializes to the JSON description format accepted by load_model.
std::string dump_model(const RobotModel& model);

/// World-frame poses of links 0..N. Pose 0 is the identity.
std::vector<RigidTransform> forward_kinematics(const RobotModel& model,
                                               const Configuration& q);

/// Joint-space mass-inertia matrix G(q), via the composite rigid body
/// algorithm. Symmetric by construction. Throws SingularMetricError if G is
/// not positive definite (e.g. a massless distal chain).
Eigen::MatrixXd mass_matrix(const RobotModel& model, const Configuration& q);

/// Returns a copy of `model` with a point mass rigidly attached to link
/// `link_index` (1-based, 1..N) at `offset` in that link's frame.
RobotModel attach_payload(const RobotModel& model, int link_index, double mass,
                          const Eigen::Vector3d& offset);

struct LimitViolation {
  Eigen::Index joint = 0;
  double value = 0.0;
  JointLimits limits;
};

/// Joints of `q` outside their stored limits. Dynamics never consult limits.
std::vector<LimitViolation> check_limits(const RobotModel& model,
                                         const Configuration& q);

}  // namespace geosyn
