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
// URDF subset: <robot name>, <link> with optional <inertial>, and
// revolute/continuous/prismatic <joint>s forming one unbranched chain.

#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "geosyn/errors.hpp"
#include "geosyn/robot_model.hpp"

namespace geosyn {

namespace {

namespace pt = boost::property_tree;

Eigen::Vector3d parse_triple(const std::string& text, const std::string& where) {
  std::istringstream in(text);
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) {
    if (!(in >> v[i])) throw ParseError(where, "expected three numbers, got '" + text + "'");
  }
  std::string rest;
  if (in >> rest) throw ParseError(where, "expected three numbers, got '" + text + "'");
  return v;
}

double parse_number(const std::string& text, const std::string& where) {
  std::istringstream in(text);
  double v = 0.0;
  std::string rest;
  if (!(in >> v) || (in >> rest)) throw ParseError(where, "expected a number, got '" + text + "'");
  return v;
}

std::string attribute(const pt::ptree& node, const std::string& name,
                      const std::string& where) {
  const auto value = node.get_optional<std::string>("<xmlattr>." + name);
  if (!value) throw ParseError(where + "@" + name, "missing attribute");
  return *value;
}

RigidTransform origin_of(const pt::ptree& node, const std::string& where) {
  const auto origin = node.get_child_optional("origin");
  if (!origin) return RigidTransform::Identity();
  const auto xyz = origin->get_optional<std::string>("<xmlattr>.xyz");
  const auto rpy = origin->get_optional<std::string>("<xmlattr>.rpy");
  return RigidTransform::FromXyzRpy(
      xyz ? parse_triple(*xyz, where + ".origin@xyz") : Eigen::Vector3d::Zero(),
      rpy ? parse_triple(*rpy, where + ".origin@rpy") : Eigen::Vector3d::Zero());
}

Link link_of(const pt::ptree& node, const std::string& name) {
  Link link;
  link.name = name;
  const std::string where = "link '" + name + "'";
  const auto inertial = node.get_child_optional("inertial");
  if (!inertial) return link;
  const RigidTransform frame = origin_of(*inertial, where + ".inertial");
  const auto mass = inertial->get_child_optional("mass");
  if (!mass) throw ParseError(where + ".inertial.mass", "missing element");
  link.mass = parse_number(attribute(*mass, "value", where + ".inertial.mass"),
                           where + ".inertial.mass@value");
  Eigen::Matrix3d I = Eigen::Matrix3d::Zero();
  if (const auto inertia = inertial->get_child_optional("inertia")) {
    const std::string at = where + ".inertial.inertia";
    auto get = [&](const char* key) {
      return parse_number(attribute(*inertia, key, at), at + "@" + key);
    };
    I << get("ixx"), get("ixy"), get("ixz"),
         get("ixy"), get("iyy"), get("iyz"),
         get("ixz"), get("iyz"), get("izz");
  }
  link.com = frame.translation;
  link.inertia = frame.rotation * I * frame.rotation.transpose();
  return link;
}

struct JointEntry {
  Joint joint;
  std::string parent;
  std::string child;
};

}  // namespace

RobotModel import_urdf(std::string_view xml) {
  pt::ptree doc;
  try {
    std::istringstream in{std::string(xml)};
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("line " + std::to_string(e.line()), e.message());
  }
  const auto robot = doc.get_child_optional("robot");
  if (!robot) throw ParseError("robot", "missing <robot> root element");
  const std::string robot_name = robot->get<std::string>("<xmlattr>.name", "robot");

  std::map<std::string, Link> links;
  std::vector<std::string> link_order;
  std::vector<JointEntry> entries;
  for (const auto& [tag, node] : *robot) {
    if (tag == "link") {
      const std::string name = attribute(node, "name", "link");
      if (links.count(name)) throw ParseError("link '" + name + "'", "duplicate link");
      links.emplace(name, link_of(node, name));
      link_order.push_back(name);
    } else if (tag == "joint") {
      const std::string name = attribute(node, "name", "joint");
      const std::string where = "joint '" + name + "'";
      const std::string type = attribute(node, "type", where);
      JointEntry entry;
      entry.joint.name = name;
      if (type == "revolute" || type == "continuous") {
        entry.joint.kind = JointKind::kRevolute;
      } else if (type == "prismatic") {
        entry.joint.kind = JointKind::kPrismatic;
      } else {
        throw ParseError(where + "@type", "unsupported joint type '" + type + "'");
      }
      entry.joint.origin = origin_of(node, where);
      const auto axis = node.get_optional<std::string>("axis.<xmlattr>.xyz");
      entry.joint.axis = axis ? parse_triple(*axis, where + ".axis@xyz")
                              : Eigen::Vector3d::UnitX();
      if (type != "continuous") {
        if (const auto limit = node.get_child_optional("limit")) {
          const auto lower = limit->get_optional<std::string>("<xmlattr>.lower");
          const auto upper = limit->get_optional<std::string>("<xmlattr>.upper");
          if (lower || upper) {
            entry.joint.limits = JointLimits{
                lower ? parse_number(*lower, where + ".limit@lower") : 0.0,
                upper ? parse_number(*upper, where + ".limit@upper") : 0.0};
          }
        }
      }
      const auto parent = node.get_child_optional("parent");
      const auto child = node.get_child_optional("child");
      if (!parent || !child) throw ParseError(where, "missing <parent> or <child>");
      entry.parent = attribute(*parent, "link", where + ".parent");
      entry.child = attribute(*child, "link", where + ".child");
      entries.push_back(std::move(entry));
    }
  }
  if (entries.empty()) throw ModelError("URDF '" + robot_name + "' has no movable joints");

  std::map<std::string, std::size_t> by_parent;
  std::set<std::string> children;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const JointEntry& e = entries[i];
    if (!links.count(e.parent) || !links.count(e.child)) {
      throw ParseError("joint '" + e.joint.name + "'", "references an unknown link");
    }
    if (!by_parent.emplace(e.parent, i).second) {
      throw ModelError("link '" + e.parent + "' has more than one child joint (branching)");
    }
    if (!children.insert(e.child).second) {
      throw ModelError("link '" + e.child + "' has more than one parent joint");
    }
  }
  std::vector<std::string> roots;
  for (const auto& name : link_order) {
    if (!children.count(name) && by_parent.count(name)) roots.push_back(name);
  }
  if (roots.size() != 1) {
    throw ModelError("URDF joints do not form a single serial chain");
  }

  std::vector<Link> chain_links{links.at(roots.front())};
  std::vector<Joint> chain_joints;
  std::string current = roots.front();
  while (by_parent.count(current)) {
    const JointEntry& e = entries[by_parent.at(current)];
    chain_joints.push_back(e.joint);
    chain_links.push_back(links.at(e.child));
    current = e.child;
    if (chain_joints.size() > entries.size()) {
      throw ModelError("URDF joint graph contains a loop");
    }
  }
  if (chain_joints.size() != entries.size()) {
    throw ModelError("URDF joints do not form a single serial chain");
  }
  return RobotModel(robot_name, std::move(chain_links), std::move(chain_joints));
}

}  // namespace geosyn
