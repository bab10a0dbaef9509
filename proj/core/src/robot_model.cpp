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
#include "geosyn/robot_model.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include <Eigen/Eigenvalues>

#include "geosyn/errors.hpp"
#include "spatial.hpp"

namespace geosyn {

Configuration::Configuration(Eigen::VectorXd values) : values_(std::move(values)) {
  if (!values_.allFinite()) {
    throw InvalidArgumentError("configuration has non-finite entries");
  }
}

Configuration::Configuration(std::initializer_list<double> values)
    : Configuration(Eigen::VectorXd(Eigen::Index(values.size()))) {
  Eigen::Index i = 0;
  for (double v : values) values_[i++] = v;
  if (!values_.allFinite()) {
    throw InvalidArgumentError("configuration has non-finite entries");
  }
}

TangentVector::TangentVector(Configuration base_config, Eigen::VectorXd velocity)
    : base(std::move(base_config)), v(std::move(velocity)) {
  if (v.size() != base.size()) {
    throw DimensionError("tangent vector has " + std::to_string(v.size()) +
                         " entries but its base has " +
                         std::to_string(base.size()));
  }
  if (!v.allFinite()) {
    throw InvalidArgumentError("tangent vector has non-finite entries");
  }
}

RigidTransform RigidTransform::FromXyzRpy(const Eigen::Vector3d& xyz,
                                          const Eigen::Vector3d& rpy) {
  RigidTransform t;
  t.rotation = (Eigen::AngleAxisd(rpy.z(), Eigen::Vector3d::UnitZ()) *
                Eigen::AngleAxisd(rpy.y(), Eigen::Vector3d::UnitY()) *
                Eigen::AngleAxisd(rpy.x(), Eigen::Vector3d::UnitX()))
                   .toRotationMatrix();
  t.translation = xyz;
  return t;
}

namespace {

constexpr double kAxisTolerance = 1e-9;

void validate_link(const Link& link) {
  const std::string who = "link '" + link.name + "'";
  if (!std::isfinite(link.mass) || link.mass < 0.0) {
    throw ModelError(who + ": mass must be finite and non-negative");
  }
  if (!link.com.allFinite() || !link.inertia.allFinite()) {
    throw ModelError(who + ": non-finite inertial parameters");
  }
  const Eigen::Matrix3d& I = link.inertia;
  const double scale = 1.0 + I.cwiseAbs().maxCoeff();
  const double tol = 1e-12 * scale;
  if ((I - I.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw ModelError(who + ": inertia tensor is not symmetric");
  }
  const Eigen::Vector3d principal =
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(I, Eigen::EigenvaluesOnly)
          .eigenvalues();
  if (principal.minCoeff() < -tol) {
    throw ModelError(who + ": inertia tensor is not positive semi-definite");
  }
  for (int k = 0; k < 3; ++k) {
    if (principal[(k + 1) % 3] + principal[(k + 2) % 3] < principal[k] - tol) {
      throw ModelError(who + ": principal moments violate the triangle inequality");
    }
  }
}

void validate_joint(const Joint& joint) {
  const std::string who = "joint '" + joint.name + "'";
  if (!joint.axis.allFinite() || std::abs(joint.axis.norm() - 1.0) > kAxisTolerance) {
    throw ModelError(who + ": axis not unit norm");
  }
  const Eigen::Matrix3d& R = joint.origin.rotation;
  if (!R.allFinite() || !joint.origin.translation.allFinite() ||
      (R.transpose() * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > 1e-9 ||
      R.determinant() < 0.0) {
    throw ModelError(who + ": origin is not a proper rigid transform");
  }
  if (joint.limits && !(joint.limits->lower <= joint.limits->upper)) {
    throw ModelError(who + ": lower limit exceeds upper limit");
  }
}

}  // namespace

RobotModel::RobotModel(std::string name, std::vector<Link> links,
                       std::vector<Joint> joints)
    : name_(std::move(name)), links_(std::move(links)), joints_(std::move(joints)) {
  if (joints_.empty()) {
    throw ModelError("model '" + name_ + "' has no joints");
  }
  if (links_.size() != joints_.size() + 1) {
    std::ostringstream msg;
    msg << "model '" << name_ << "' has " << joints_.size() << " joints but "
        << links_.size() << " links (expected joints + 1 including the base)";
    throw ModelError(msg.str());
  }
  for (std::size_t i = 0; i < links_.size(); ++i) {
    if (links_[i].name.empty()) links_[i].name = "link" + std::to_string(i);
    validate_link(links_[i]);
  }
  for (std::size_t i = 0; i < joints_.size(); ++i) {
    if (joints_[i].name.empty()) joints_[i].name = "joint" + std::to_string(i + 1);
    validate_joint(joints_[i]);
  }
}

void RobotModel::check_dimension(const Eigen::VectorXd& q) const {
  if (q.size() != dof()) {
    throw DimensionError("dimension mismatch: expected " + std::to_string(dof()) +
                         " joint values, got " + std::to_string(q.size()));
  }
}

void RobotModel::check_dimension(const Configuration& q) const {
  check_dimension(q.values());
}

std::vector<RigidTransform> forward_kinematics(const RobotModel& model,
                                               const Configuration& q) {
  model.check_dimension(q);
  std::vector<RigidTransform> poses;
  poses.reserve(model.links().size());
  poses.push_back(RigidTransform::Identity());
  for (Eigen::Index i = 0; i < model.dof(); ++i) {
    const Joint& joint = model.joints()[std::size_t(i)];
    poses.push_back(poses.back() * joint.origin * spatial::joint_motion(joint, q[i]));
  }
  return poses;
}

RobotModel attach_payload(const RobotModel& model, int link_index, double mass,
                          const Eigen::Vector3d& offset) {
  if (link_index < 1 || link_index > model.dof()) {
    throw InvalidArgumentError("payload link index " + std::to_string(link_index) +
                               " out of range 1.." + std::to_string(model.dof()));
  }
  if (!std::isfinite(mass) || mass < 0.0) {
    throw InvalidArgumentError("payload mass must be finite and non-negative");
  }
  if (!offset.allFinite()) {
    throw InvalidArgumentError("payload offset must be finite");
  }
  std::vector<Link> links = model.links();
  if (mass > 0.0) {
    Link& link = links[std::size_t(link_index)];
    const double total = link.mass + mass;
    const Eigen::Vector3d com = (link.mass * link.com + mass * offset) / total;
    // Parallel-axis shift of both bodies to the combined center of mass.
    auto shift = [](double m, const Eigen::Vector3d& d) -> Eigen::Matrix3d {
      return m * (d.squaredNorm() * Eigen::Matrix3d::Identity() - d * d.transpose());
    };
    link.inertia = link.inertia + shift(link.mass, link.com - com) +
                   shift(mass, offset - com);
    link.inertia = 0.5 * (link.inertia + link.inertia.transpose());
    link.com = com;
    link.mass = total;
  }
  return RobotModel(model.name(), std::move(links), model.joints());
}

std::vector<LimitViolation> check_limits(const RobotModel& model,
                                         const Configuration& q) {
  model.check_dimension(q);
  std::vector<LimitViolation> out;
  for (Eigen::Index i = 0; i < model.dof(); ++i) {
    const auto& limits = model.joints()[std::size_t(i)].limits;
    if (limits && (q[i] < limits->lower || q[i] > limits->upper)) {
      out.push_back({i, q[i], *limits});
    }
  }
  return out;
}

}  // namespace geosyn
