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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "geosyn/errors.hpp"
#include "geosyn/report.hpp"

namespace geosyn::cli {

/// Bad command-line input that the parser itself cannot detect.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Flags accepted by every subcommand.
struct GlobalOptions {
  double step = 1e-3;
  double duration = 1.0;
  double tol_bvp = 1e-8;
  std::uint64_t seed = 0;
  std::string out;
};

/// Parses "0.1,-2,3e-1" into a vector. Throws UsageError.
Eigen::VectorXd parse_list(const std::string& text, const std::string& what);

RunReport cmd_mass_matrix(const std::string& model_path, const Eigen::VectorXd& q,
                          const GlobalOptions& options, std::ostream& out);

RunReport cmd_shoot(const std::string& model_path, const Eigen::VectorXd& q0,
                    const Eigen::VectorXd& v0, const GlobalOptions& options,
                    std::ostream& out);

RunReport cmd_connect(const std::string& model_path, const Eigen::VectorXd& q0,
                      const Eigen::VectorXd& q1, const GlobalOptions& options,
                      std::ostream& out);

/// Geodesic vs. straight joint interpolation. Writes geodesic.csv,
/// euclidean.csv, report.txt and, for 2-DoF models, compare.svg into
/// options.out (created if missing).
RunReport cmd_compare(const std::string& model_path, const Eigen::VectorXd& q0,
                      const Eigen::VectorXd& q1, int grid, const GlobalOptions& options,
                      std::ostream& out);

RunReport cmd_combine(const std::string& model_path, const std::string& synergy_path,
                      const Eigen::VectorXd& weights,
                      const std::optional<Eigen::VectorXd>& target_base,
                      const GlobalOptions& options, std::ostream& out);

/// Runs the randomized invariant suite against one model.
RunReport cmd_validate(const std::string& model_path, const GlobalOptions& options,
                       std::ostream& out);

/// Full command-line entry point; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geosyn::cli
