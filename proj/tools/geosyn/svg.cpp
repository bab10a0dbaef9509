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
#include "geosyn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "geosyn/errors.hpp"

namespace geosyn::cli {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 60.0;
constexpr double kPlot = kCanvas - 2.0 * kMargin;

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", v);
  return buffer;
}

std::string tick(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

// Square joint-space window (radians) mapped onto the plot area.
struct Window {
  double q1_min, q2_min, span;

  double x(double q1) const { return kMargin + (q1 - q1_min) / span * kPlot; }
  double y(double q2) const { return kMargin + kPlot - (q2 - q2_min) / span * kPlot; }
};

Window fit_window(const GeodesicTrajectory& a, const GeodesicTrajectory& b) {
  double lo1 = INFINITY, hi1 = -INFINITY, lo2 = INFINITY, hi2 = -INFINITY;
  for (const auto* traj : {&a, &b}) {
    for (const TrajectorySample& s : traj->samples) {
      lo1 = std::min(lo1, s.q[0]);
      hi1 = std::max(hi1, s.q[0]);
      lo2 = std::min(lo2, s.q[1]);
      hi2 = std::max(hi2, s.q[1]);
    }
  }
  const double span = std::max({hi1 - lo1, hi2 - lo2, 0.5}) * 1.4;
  return {0.5 * (lo1 + hi1) - 0.5 * span, 0.5 * (lo2 + hi2) - 0.5 * span, span};
}

std::string polyline(const GeodesicTrajectory& traj, const Window& w, const char* style) {
  std::string points;
  // Thin long trajectories; the plot does not need every integrator step.
  const std::size_t stride = std::max<std::size_t>(1, traj.samples.size() / 400);
  for (std::size_t k = 0; k < traj.samples.size(); k += stride) {
    const auto& q = traj.samples[k].q;
    points += num(w.x(q[0])) + "," + num(w.y(q[1])) + " ";
  }
  const auto& q = traj.back().q;
  points += num(w.x(q[0])) + "," + num(w.y(q[1]));
  return "  <polyline fill=\"none\" " + std::string(style) + " points=\"" + points + "\"/>\n";
}

}  // namespace

std::string render_comparison_svg(const RobotModel& model,
                                  const GeodesicTrajectory& geodesic,
                                  const GeodesicTrajectory& straight, int grid) {
  if (model.dof() != 2) throw InvalidArgumentError("SVG plots need a 2-DoF model");
  if (grid < 2) throw InvalidArgumentError("ellipse grid must be at least 2x2");
  const Window w = fit_window(geodesic, straight);
  const double cell = w.span / grid;

  struct Ellipse {
    double q1, q2, angle_deg, a, b;
  };
  std::vector<Ellipse> ellipses;
  double largest = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double q1 = w.q1_min + (i + 0.5) * cell;
      const double q2 = w.q2_min + (j + 0.5) * cell;
      const Eigen::MatrixXd G = mass_matrix(model, Configuration{q1, q2});
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(G);
      const Eigen::Vector2d major = eig.eigenvectors().col(1);
      // Semi-axes sqrt(lambda_i) * det^(1/4) give area pi * det(G).
      const double quarter = std::pow(G.determinant(), 0.25);
      const double a = std::sqrt(eig.eigenvalues()[1]) * quarter;
      const double b = std::sqrt(eig.eigenvalues()[0]) * quarter;
      // Screen y points down, so the angle flips sign.
      const double angle = -std::atan2(major.y(), major.x()) * 180.0 / M_PI;
      ellipses.push_back({q1, q2, angle, a, b});
      largest = std::max(largest, a);
    }
  }
  const double scale = largest > 0.0 ? 0.45 * cell / largest : 0.0;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + num(kCanvas) + " " +
         num(kCanvas) + "\" width=\"" + num(kCanvas) + "\" height=\"" + num(kCanvas) + "\">\n";
  svg += "  <rect x=\"0\" y=\"0\" width=\"" + num(kCanvas) + "\" height=\"" + num(kCanvas) +
         "\" fill=\"white\"/>\n";
  svg += "  <g id=\"metric\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#3182bd\" "
         "stroke-width=\"0.8\">\n";
  const double px = kPlot / w.span;
  for (const Ellipse& e : ellipses) {
    const double cx = w.x(e.q1), cy = w.y(e.q2);
    svg += "    <ellipse cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" rx=\"" +
           num(e.a * scale * px) + "\" ry=\"" + num(e.b * scale * px) +
           "\" transform=\"rotate(" + num(e.angle_deg) + " " + num(cx) + " " + num(cy) +
           ")\"/>\n";
  }
  svg += "  </g>\n";

  // Axes with five ticks each.
  svg += "  <g id=\"axes\" stroke=\"black\" stroke-width=\"1\" font-family=\"sans-serif\" "
         "font-size=\"12\">\n";
  svg += "    <rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(kPlot) +
         "\" height=\"" + num(kPlot) + "\" fill=\"none\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double f = t / 4.0;
    const double v1 = w.q1_min + f * w.span, v2 = w.q2_min + f * w.span;
    const double x = w.x(v1), y = w.y(v2);
    svg += "    <line x1=\"" + num(x) + "\" y1=\"" + num(kMargin + kPlot) + "\" x2=\"" + num(x) +
           "\" y2=\"" + num(kMargin + kPlot + 5) + "\"/>\n";
    svg += "    <text x=\"" + num(x) + "\" y=\"" + num(kMargin + kPlot + 20) +
           "\" text-anchor=\"middle\" stroke=\"none\">" + tick(v1) +
           "</text>\n";
    svg += "    <line x1=\"" + num(kMargin - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kMargin) +
           "\" y2=\"" + num(y) + "\"/>\n";
    svg += "    <text x=\"" + num(kMargin - 8) + "\" y=\"" + num(y + 4) +
           "\" text-anchor=\"end\" stroke=\"none\">" + tick(v2) +
           "</text>\n";
  }
  svg += "    <text x=\"" + num(kCanvas / 2) + "\" y=\"" + num(kCanvas - 15) +
         "\" text-anchor=\"middle\" stroke=\"none\">q1 [rad]</text>\n";
  svg += "    <text x=\"15\" y=\"" + num(kCanvas / 2) + "\" text-anchor=\"middle\" stroke=\"none\" "
         "transform=\"rotate(-90 15 " + num(kCanvas / 2) + ")\">q2 [rad]</text>\n";
  svg += "  </g>\n";

  svg += polyline(straight, w,
                  "id=\"euclidean\" stroke=\"#636363\" stroke-width=\"2\" stroke-dasharray=\"6,4\"");
  svg += polyline(geodesic, w, "id=\"geodesic\" stroke=\"#de2d26\" stroke-width=\"2.5\"");
  const auto& s = geodesic.front().q;
  const auto& g = geodesic.back().q;
  svg += "  <circle cx=\"" + num(w.x(s[0])) + "\" cy=\"" + num(w.y(s[1])) +
         "\" r=\"4\" fill=\"black\"/>\n";
  svg += "  <circle cx=\"" + num(w.x(g[0])) + "\" cy=\"" + num(w.y(g[1])) +
         "\" r=\"4\" fill=\"black\"/>\n";
  svg += "  <text x=\"" + num(kMargin) + "\" y=\"30\" font-family=\"sans-serif\" font-size=\"13\">"
         "geodesic (solid) vs. straight joint path (dashed); ellipse area proportional to "
         "det(G)</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace geosyn::cli
