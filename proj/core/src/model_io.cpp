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
#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "geosyn/errors.hpp"
#include "geosyn/robot_model.hpp"
#include "json_util.hpp"

namespace geosyn {

namespace {

using nlohmann::json;
using json_util::require;
using json_util::vector_at;

Eigen::Vector3d vec3(const json& value, const std::string& where) {
  return vector_at(value, where, 3);
}

Eigen::Matrix3d inertia_at(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where, "expected an array");
  Eigen::Matrix3d I;
  if (value.size() == 6) {
    const Eigen::VectorXd v = vector_at(value, where);
    I << v[0], v[3], v[4],
         v[3], v[1], v[5],
         v[4], v[5], v[2];
    return I;
  }
  if (value.size() == 3) {
    for (int r = 0; r < 3; ++r) {
      I.row(r) = vec3(value[std::size_t(r)], where + "[" + std::to_string(r) + "]");
    }
    return I;
  }
  throw ParseError(where, "expected 6 numbers (ixx,iyy,izz,ixy,ixz,iyz) or a 3x3 matrix");
}

Joint joint_at(const json& value, const std::string& where) {
  if (!value.is_object()) throw ParseError(where, "expected an object");
  Joint joint;
  if (value.contains("name")) joint.name = json_util::string_at(value["name"], where + ".name");
  const std::string kind = json_util::string_at(require(value, "kind", where), where + ".kind");
  if (kind == "revolute") {
    joint.kind = JointKind::kRevolute;
  } else if (kind == "prismatic") {
    joint.kind = JointKind::kPrismatic;
  } else {
    throw ParseError(where + ".kind", "unknown joint kind '" + kind + "'");
  }
  joint.axis = vec3(require(value, "axis", where), where + ".axis");
  Eigen::Vector3d xyz = Eigen::Vector3d::Zero(), rpy = Eigen::Vector3d::Zero();
  if (value.contains("origin")) {
    const json& origin = value["origin"];
    const std::string at = where + ".origin";
    if (!origin.is_object()) throw ParseError(at, "expected an object");
    if (origin.contains("xyz")) xyz = vec3(origin["xyz"], at + ".xyz");
    if (origin.contains("rpy")) rpy = vec3(origin["rpy"], at + ".rpy");
  }
  joint.origin = RigidTransform::FromXyzRpy(xyz, rpy);
  return joint;
}

Link link_at(const json& value, const std::string& where) {
  if (!value.is_object()) throw ParseError(where, "expected an object");
  Link link;
  if (value.contains("name")) link.name = json_util::string_at(value["name"], where + ".name");
  link.mass = json_util::number_at(require(value, "mass", where), where + ".mass");
  if (value.contains("com")) link.com = vec3(value["com"], where + ".com");
  if (value.contains("inertia")) link.inertia = inertia_at(value["inertia"], where + ".inertia");
  return link;
}

json vec_json(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

}  // namespace

RobotModel load_model(std::string_view text) {
  const json doc = json_util::parse(text);
  if (!doc.is_object()) throw ParseError("", "robot description must be a JSON object");
  const std::string name =
      doc.contains("name") ? json_util::string_at(doc["name"], "name") : "robot";

  const json& joints_json = require(doc, "joints", "");
  const json& links_json = require(doc, "links", "");
  if (!joints_json.is_array()) throw ParseError("joints", "expected an array");
  if (!links_json.is_array()) throw ParseError("links", "expected an array");
  if (links_json.size() != joints_json.size()) {
    throw ParseError("links", "expected one link per joint (" +
                                  std::to_string(joints_json.size()) + "), got " +
                                  std::to_string(links_json.size()));
  }

  std::vector<Joint> joints;
  for (std::size_t i = 0; i < joints_json.size(); ++i) {
    joints.push_back(joint_at(joints_json[i], "joints[" + std::to_string(i) + "]"));
  }
  std::vector<Link> links;
  links.push_back(Link{"base", 0.0, Eigen::Vector3d::Zero(), Eigen::Matrix3d::Zero()});
  for (std::size_t i = 0; i < links_json.size(); ++i) {
    links.push_back(link_at(links_json[i], "links[" + std::to_string(i) + "]"));
  }

  if (doc.contains("limits")) {
    const json& limits = doc["limits"];
    if (!limits.is_array() || limits.size() != joints.size()) {
      throw ParseError("limits", "expected one {lower, upper} entry per joint");
    }
    for (std::size_t i = 0; i < limits.size(); ++i) {
      const std::string where = "limits[" + std::to_string(i) + "]";
      if (limits[i].is_null()) continue;
      joints[i].limits = JointLimits{
          json_util::number_at(require(limits[i], "lower", where), where + ".lower"),
          json_util::number_at(require(limits[i], "upper", where), where + ".upper")};
    }
  }
  return RobotModel(name, std::move(links), std::move(joints));
}

std::string dump_model(const RobotModel& model) {
  json joints = json::array(), links = json::array(), limits = json::array();
  bool any_limits = false;
  for (const Joint& joint : model.joints()) {
    const Eigen::Matrix3d& R = joint.origin.rotation;
    // Inverse of R = Rz(yaw) Ry(pitch) Rx(roll).
    const double pitch = std::asin(std::clamp(-R(2, 0), -1.0, 1.0));
    const double roll = std::atan2(R(2, 1), R(2, 2));
    const double yaw = std::atan2(R(1, 0), R(0, 0));
    joints.push_back({{"name", joint.name},
                      {"kind", joint.kind == JointKind::kRevolute ? "revolute" : "prismatic"},
                      {"axis", vec_json(joint.axis)},
                      {"origin", {{"xyz", vec_json(joint.origin.translation)},
                                  {"rpy", json::array({roll, pitch, yaw})}}}});
    if (joint.limits) {
      any_limits = true;
      limits.push_back({{"lower", joint.limits->lower}, {"upper", joint.limits->upper}});
    } else {
      limits.push_back(nullptr);
    }
  }
  for (std::size_t i = 1; i < model.links().size(); ++i) {
    const Link& link = model.links()[i];
    const Eigen::Matrix3d& I = link.inertia;
    links.push_back({{"name", link.name},
                     {"mass", link.mass},
                     {"com", vec_json(link.com)},
                     {"inertia", json::array({I(0, 0), I(1, 1), I(2, 2), I(0, 1), I(0, 2),
                                              I(1, 2)})}});
  }
  json doc{{"name", model.name()}, {"joints", joints}, {"links", links}};
  if (any_limits) doc["limits"] = limits;
  return doc.dump(2) + "\n";
}

RobotModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string ext = path.extension().string();
  try {
    if (ext == ".urdf" || ext == ".xml") return import_urdf(buffer.str());
    return load_model(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ":" + e.locus(),
                     std::string(e.what()).substr(e.locus().empty() ? 0 : e.locus().size() + 2));
  }
}

}  // namespace geosyn
