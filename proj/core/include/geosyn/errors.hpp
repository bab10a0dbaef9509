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
#include <stdexcept>
#include <string>

namespace geosyn {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed robot description, synergy file or trajectory CSV. `locus`
/// names the line or field path that could not be read.
class ParseError : public Error {
 public:
  ParseError(const std::string& locus, const std::string& message)
      : Error(locus.empty() ? message : locus + ": " + message), locus_(locus) {}
  const std::string& locus() const noexcept { return locus_; }

 private:
  std::string locus_;
};

/// A robot model that parses but violates a physical or structural invariant.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Vector or configuration sized for a different number of joints.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Tangent vectors based at different configurations were mixed.
class BaseMismatchError : public Error {
 public:
  using Error::Error;
};

/// Caller supplied an out-of-range argument (negative duration, bad index...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Cholesky factorisation of the mass matrix failed.
class SingularMetricError : public Error {
 public:
  explicit SingularMetricError(const std::string& message,
                               std::optional<double> time = std::nullopt)
      : Error(time ? message + " at t=" + std::to_string(*time) : message),
        time_(time) {}
  std::optional<double> time() const noexcept { return time_; }

 private:
  std::optional<double> time_;
};

/// Integration produced a non-finite state or an exploding velocity.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& message, double time)
      : Error(message + " at t=" + std::to_string(time)), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// Boundary-value solve did not reach tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double best_residual)
      : Error(message + " (best residual " + std::to_string(best_residual) + ")"),
        reason_(message),
        best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }
  /// The message without the residual suffix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
  double best_residual_;
};

}  // namespace geosyn
