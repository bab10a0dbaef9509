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

#include <cstddef>
#include <initializer_list>
#include <utility>

#include <Eigen/Core>

namespace geosyn {

/// A point on the configuration manifold: one value per joint, radians for
/// revolute joints and meters for prismatic ones. Entries are always finite.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(Eigen::VectorXd values);
  Configuration(std::initializer_list<double> values);

  static Configuration Zero(Eigen::Index dof) {
    return Configuration(Eigen::VectorXd::Zero(dof));
  }

  const Eigen::VectorXd& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_[i]; }

  /// Exact, element-wise comparison. No tolerance is applied.
  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.values_.size() == b.values_.size() && a.values_ == b.values_;
  }

 private:
  Eigen::VectorXd values_;
};

/// A joint velocity bound to the configuration whose tangent space it lives in.
struct TangentVector {
  TangentVector() = default;
  TangentVector(Configuration base_config, Eigen::VectorXd velocity);

  Eigen::Index size() const noexcept { return v.size(); }

  Configuration base;
  Eigen::VectorXd v;
};

}  // namespace geosyn
