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
#include "geosyn/synergy.hpp"

#include <cmath>
#include <utility>

#include "geosyn/errors.hpp"
#include "geosyn/metric.hpp"
#include "geosyn/transport.hpp"
#include "json_util.hpp"
#include "kernels.hpp"

namespace geosyn {

namespace {

constexpr double kPivotTolerance = 1e-12;

void check_lengths(std::size_t synergies, std::size_t weights) {
  if (synergies == 0) {
    throw InvalidArgumentError("at least one synergy is required");
  }
  if (synergies != weights) {
    throw InvalidArgumentError("got " + std::to_string(weights) + " weights for " +
                               std::to_string(synergies) + " synergies");
  }
}

}  // namespace

GeodesicSynergy::GeodesicSynergy(std::string name, TangentVector v)
    : label(std::move(name)), velocity(std::move(v)) {}

GeodesicSynergy combine_same_base(std::span<const GeodesicSynergy> synergies,
                                  std::span<const double> weights) {
  check_lengths(synergies.size(), weights.size());
  const Configuration& base = synergies.front().base();
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(base.size());
  std::string label;
  for (std::size_t i = 0; i < synergies.size(); ++i) {
    const GeodesicSynergy& s = synergies[i];
    if (!(s.base() == base)) {
      throw BaseMismatchError("synergy '" + s.label + "' has a different base");
    }
    sum += weights[i] * s.velocity.v;
    if (!label.empty()) label += "+";
    label += s.label;
  }
  return GeodesicSynergy(label, TangentVector(base, std::move(sum)));
}

GeodesicSynergy combine_at(const RobotModel& model,
                           std::span<const GeodesicSynergy> synergies,
                           std::span<const double> weights,
                           const Configuration& target_base, double transport_duration,
                           const ConnectOptions& options) {
  check_lengths(synergies.size(), weights.size());
  model.check_dimension(target_base);
  std::vector<GeodesicSynergy> moved;
  moved.reserve(synergies.size());
  for (const GeodesicSynergy& s : synergies) {
    model.check_dimension(s.velocity.v);
    try {
      moved.emplace_back(
          s.label, transport_to(model, s.velocity, target_base, transport_duration, options)
                       .vector);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("transport of synergy '" + s.label + "' failed: " + e.reason(),
                             e.best_residual());
    }
  }
  return combine_same_base(moved, weights);
}

SynergyBasis orthonormal_basis(const RobotModel& model, const Configuration& base,
                               std::optional<Eigen::MatrixXd> seed) {
  const Eigen::MatrixXd G = mass_matrix(model, base);
  const Eigen::Index n = model.dof();
  const Eigen::MatrixXd S = seed ? *seed : Eigen::MatrixXd::Identity(n, n);
  if (S.rows() != n || S.cols() != n) {
    throw DimensionError("seed must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  Eigen::MatrixXd B(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::VectorXd w = S.col(j);
    const double original = std::sqrt(w.dot(G * w));
    // Two passes of modified Gram-Schmidt keep BᵀGB = I near machine precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        w -= B.col(i).dot(G * w) * B.col(i);
      }
    }
    const double norm = std::sqrt(std::max(0.0, w.dot(G * w)));
    if (!(original > 0.0) || norm <= kPivotTolerance * original) {
      throw InvalidArgumentError("seed vectors are linearly dependent (column " +
                                 std::to_string(j) + ")");
    }
    B.col(j) = w / norm;
  }
  SynergyBasis basis{base, {}};
  for (Eigen::Index j = 0; j < n; ++j) basis.vectors.emplace_back(base, B.col(j));
  return basis;
}

Eigen::VectorXd decompose(const RobotModel& model, const SynergyBasis& basis,
                          const TangentVector& target) {
  require_base(basis.base, target);
  const Eigen::MatrixXd G = mass_matrix(model, basis.base);
  const Eigen::VectorXd Gt = G * target.v;
  Eigen::VectorXd w(Eigen::Index(basis.vectors.size()));
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    w[Eigen::Index(i)] = basis.vectors[i].v.dot(Gt);
  }
  return w;
}

TangentVector reconstruct(const SynergyBasis& basis, const Eigen::VectorXd& weights) {
  if (weights.size() != Eigen::Index(basis.vectors.size())) {
    throw DimensionError("weight count does not match basis size");
  }
  Eigen::VectorXd v = Eigen::VectorXd::Zero(basis.base.size());
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    v += weights[Eigen::Index(i)] * basis.vectors[i].v;
  }
  return TangentVector(basis.base, std::move(v));
}

GeodesicTrajectory execute(const RobotModel& model, const GeodesicSynergy& synergy,
                           double duration, double step) {
  return shoot(model, synergy.velocity, duration, step);
}

std::vector<GeodesicSynergy> load_synergies(std::string_view text) {
  const nlohmann::json doc = json_util::parse(text);
  const nlohmann::json& list = json_util::require(doc, "synergies", "");
  if (!list.is_array() || list.empty()) {
    throw ParseError("synergies", "expected a non-empty array");
  }
  std::vector<GeodesicSynergy> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "synergies[" + std::to_string(i) + "]";
    const nlohmann::json& item = list[i];
    if (!item.is_object()) throw ParseError(where, "expected an object");
    std::string label = item.contains("label") ? json_util::string_at(item["label"], where + ".label")
                                                : "synergy" + std::to_string(i + 1);
    Eigen::VectorXd base = json_util::vector_at(json_util::require(item, "base", where),
                                                where + ".base");
    Eigen::VectorXd velocity = json_util::vector_at(
        json_util::require(item, "velocity", where), where + ".velocity");
    if (base.size() != velocity.size()) {
      throw ParseError(where, "base and velocity lengths differ");
    }
    out.emplace_back(std::move(label), TangentVector(Configuration(std::move(base)),
                                                     std::move(velocity)));
  }
  return out;
}

std::string dump_synergies(std::span<const GeodesicSynergy> synergies) {
  nlohmann::json list = nlohmann::json::array();
  for (const GeodesicSynergy& s : synergies) {
    list.push_back({{"label", s.label},
                    {"base", json_util::to_json(s.base().values())},
                    {"velocity", json_util::to_json(s.velocity.v)}});
  }
  return nlohmann::json{{"synergies", list}}.dump(2) + "\n";
}

}  // namespace geosyn
