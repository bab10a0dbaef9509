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

// Minimal 6D spatial algebra, angular part first. Only what the chain
// algorithms need.

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "geosyn/robot_model.hpp"

namespace geosyn::spatial {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Matrix6d = Eigen::Matrix<double, 6, 6>;

inline Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return m;
}

// Plücker coordinate transform from frame A to frame B. B's origin sits at
// `r` (A coordinates) and `E` maps A-coordinates to B-coordinates.
struct Transform {
  Eigen::Matrix3d E = Eigen::Matrix3d::Identity();
  Eigen::Vector3d r = Eigen::Vector3d::Zero();

  // Transform into a frame placed at `pose` relative to the current one.
  static Transform FromPose(const RigidTransform& pose) {
    return {pose.rotation.transpose(), pose.translation};
  }

  Vector6d apply_motion(const Vector6d& m) const {
    Vector6d out;
    const Eigen::Vector3d w = m.head<3>();
    out.head<3>() = E * w;
    out.tail<3>() = E * (m.tail<3>() - r.cross(w));
    return out;
  }

  // X^T f: maps a force in B coordinates back to A coordinates.
  Vector6d apply_transpose_force(const Vector6d& f) const {
    Vector6d out;
    const Eigen::Vector3d lin = E.transpose() * f.tail<3>();
    out.head<3>() = E.transpose() * f.head<3>() + r.cross(lin);
    out.tail<3>() = lin;
    return out;
  }

  // this ∘ inner : first inner (A→B), then this (B→C).
  Transform operator*(const Transform& inner) const {
    return {E * inner.E, inner.r + inner.E.transpose() * r};
  }

  Matrix6d motion_matrix() const {
    Matrix6d X = Matrix6d::Zero();
    X.topLeftCorner<3, 3>() = E;
    X.bottomLeftCorner<3, 3>() = -E * skew(r);
    X.bottomRightCorner<3, 3>() = E;
    return X;
  }
};

inline Vector6d cross_motion(const Vector6d& v, const Vector6d& m) {
  Vector6d out;
  out.head<3>() = v.head<3>().cross(m.head<3>());
  out.tail<3>() = v.head<3>().cross(m.tail<3>()) + v.tail<3>().cross(m.head<3>());
  return out;
}

inline Vector6d cross_force(const Vector6d& v, const Vector6d& f) {
  Vector6d out;
  out.head<3>() = v.head<3>().cross(f.head<3>()) + v.tail<3>().cross(f.tail<3>());
  out.tail<3>() = v.head<3>().cross(f.tail<3>());
  return out;
}

// Spatial inertia about the link-frame origin.
inline Matrix6d inertia(const Link& link) {
  const Eigen::Matrix3d c = skew(link.com);
  Matrix6d I;
  I.topLeftCorner<3, 3>() = link.inertia + link.mass * c * c.transpose();
  I.topRightCorner<3, 3>() = link.mass * c;
  I.bottomLeftCorner<3, 3>() = link.mass * c.transpose();
  I.bottomRightCorner<3, 3>() = link.mass * Eigen::Matrix3d::Identity();
  return I;
}

inline Vector6d motion_subspace(const Joint& joint) {
  Vector6d s = Vector6d::Zero();
  if (joint.kind == JointKind::kRevolute) {
    s.head<3>() = joint.axis;
  } else {
    s.tail<3>() = joint.axis;
  }
  return s;
}

// Pose of the moving link frame relative to the joint frame.
inline RigidTransform joint_motion(const Joint& joint, double value) {
  RigidTransform t;
  if (joint.kind == JointKind::kRevolute) {
    t.rotation = Eigen::AngleAxisd(value, joint.axis).toRotationMatrix();
  } else {
    t.translation = value * joint.axis;
  }
  return t;
}

// Parent-link to child-link transform for joint value `value`.
inline Transform parent_to_child(const Joint& joint, double value) {
  return Transform::FromPose(joint_motion(joint, value)) *
         Transform::FromPose(joint.origin);
}

}  // namespace geosyn::spatial
