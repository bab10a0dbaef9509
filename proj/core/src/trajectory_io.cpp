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
#include "geosyn/trajectory_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "geosyn/errors.hpp"
#include "kernels.hpp"

namespace geosyn {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string trajectory_csv_header(Eigen::Index dof) {
  std::string header = "t";
  for (const char* prefix : {"q", "qd", "qdd"}) {
    for (Eigen::Index i = 1; i <= dof; ++i) header += "," + std::string(prefix) + std::to_string(i);
  }
  return header + ",energy";
}

void write_trajectory_csv(std::ostream& out, const RobotModel& model,
                          const GeodesicTrajectory& traj) {
  const Eigen::Index n = model.dof();
  out << trajectory_csv_header(n) << '\n';
  Eigen::MatrixXd G;
  std::string row;
  for (const TrajectorySample& s : traj.samples) {
    model.check_dimension(s.q);
    detail::crba(model, s.q, G);
    row = format_double(s.t);
    for (const Eigen::VectorXd* v : {&s.q, &s.qdot, &s.qddot}) {
      for (Eigen::Index i = 0; i < n; ++i) row += "," + format_double((*v)[i]);
    }
    row += "," + format_double(0.5 * s.qdot.dot(G * s.qdot));
    out << row << '\n';
  }
}

void save_trajectory_csv(const std::filesystem::path& path, const RobotModel& model,
                         const GeodesicTrajectory& traj) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    try {
      write_trajectory_csv(out, model, traj);
    } catch (...) {
      out.close();
      std::filesystem::remove(tmp);
      throw;
    }
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw Error("failed writing " + path.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

GeodesicTrajectory read_trajectory_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("line 1", "empty trajectory CSV");
  const auto columns = std::size_t(std::count(line.begin(), line.end(), ',') + 1);
  if (columns < 5 || (columns - 2) % 3 != 0) {
    throw ParseError("line 1", "unexpected column count " + std::to_string(columns));
  }
  const auto n = Eigen::Index((columns - 2) / 3);
  if (line != trajectory_csv_header(n)) throw ParseError("line 1", "unexpected header");

  GeodesicTrajectory traj;
  std::size_t line_no = 1;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    values.clear();
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(field, &used));
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no), "bad number '" + field + "'");
      }
    }
    if (values.size() != columns) {
      throw ParseError("line " + std::to_string(line_no), "wrong number of fields");
    }
    TrajectorySample s;
    s.t = values[0];
    s.q = Eigen::Map<const Eigen::VectorXd>(values.data() + 1, n);
    s.qdot = Eigen::Map<const Eigen::VectorXd>(values.data() + 1 + n, n);
    s.qddot = Eigen::Map<const Eigen::VectorXd>(values.data() + 1 + 2 * n, n);
    if (traj.samples.empty()) {
      traj.energy = values.back();
    } else if (!(s.t > traj.samples.back().t)) {
      throw ParseError("line " + std::to_string(line_no), "time is not strictly increasing");
    }
    traj.samples.push_back(std::move(s));
  }
  if (traj.samples.empty()) throw ParseError("line 2", "trajectory has no samples");
  traj.duration = traj.samples.back().t - traj.samples.front().t;
  return traj;
}

}  // namespace geosyn
