// Copyright 2026 The rsfov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RSFOV__SVG_HPP_
#define RSFOV__SVG_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "rsfov/result_io.hpp"

namespace rsfov
{

namespace detail
{

inline std::string fmt3(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

/// \brief World to viewbox mapping: uniform scale, y axis up, centred in the viewbox.
struct SvgFrame
{
  double scale{1.0};
  double ox{0.0};
  double oy{0.0};

  double x(double wx) const {return ox + scale * wx;}
  double y(double wy) const {return oy - scale * wy;}
};

inline SvgFrame fit_frame(const std::vector<std::pair<double, double>> & pts, double view, double margin)
{
  double lo_x = std::numeric_limits<double>::infinity(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  for (const auto & [x, y] : pts) {
    lo_x = std::min(lo_x, x);
    hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y);
    hi_y = std::max(hi_y, y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  SvgFrame f;
  f.scale = (view - 2.0 * margin) / span;
  f.ox = 0.5 * view - f.scale * 0.5 * (lo_x + hi_x);
  f.oy = 0.5 * view + f.scale * 0.5 * (lo_y + hi_y);
  return f;
}

inline std::string polyline(const SvgFrame & f, const std::vector<Pose> & pts)
{
  std::string s;
  for (const auto & p : pts) {
    if (!s.empty()) {
      s += ' ';
    }
    s += fmt3(f.x(p.x)) + "," + fmt3(f.y(p.y));
  }
  return s;
}

/// \brief Path data of a field-of-view wedge of radius r (viewbox units).
inline std::string wedge_path(const SvgFrame & f, const Waypoint & w, double r)
{
  const double cx = f.x(w.x);
  const double cy = f.y(w.y);
  auto pt = [&](double th) {
      return fmt3(cx + r * std::cos(th)) + "," + fmt3(cy - r * std::sin(th));
    };
  const double a = w.fov.theta_min();
  const double b = w.fov.theta_max();
  const std::string rr = fmt3(r) + " " + fmt3(r);
  if (w.fov.width() >= kTwoPi - 1e-9) {
    return "M " + pt(a) + " A " + rr + " 0 1 0 " + pt(a + kPi) + " A " + rr + " 0 1 0 " + pt(a) + " Z";
  }
  const int large = w.fov.width() > kPi ? 1 : 0;
  return "M " + fmt3(cx) + "," + fmt3(cy) + " L " + pt(a) + " A " + rr + " 0 " +
         std::to_string(large) + " 0 " + pt(b) + " Z";
}

}  // namespace detail

/// \brief SVG 1.1 figure of a result: field-of-view wedges, waypoints, the relaxed path
/// (dashed, may jump in heading at waypoints) and the feasible path (solid).
///
/// Structure: groups fov-wedges (one path.wedge per waypoint), lower-bound-path and
/// feasible-path (one polyline.leg per leg), waypoints and legend.
inline std::string render_svg(const Instance & inst, const ResultDocument & doc, int samples_per_segment = 24)
{
  constexpr double kView = 1000.0;
  constexpr double kMargin = 60.0;
  const PlanResult & r = doc.plan;
  const auto idx = sequence_indices(inst, r.sequence);
  const std::size_t n = idx.size();

  std::vector<std::vector<Pose>> lb_pts, fe_pts;
  std::vector<std::pair<double, double>> all;
  for (const auto & w : inst.waypoints) {
    all.emplace_back(w.x, w.y);
  }
  for (std::size_t t = 0; t < r.lb_legs.size(); ++t) {
    const Waypoint & a = inst.waypoints[idx[t]];
    lb_pts.push_back(integrate_path(r.lb_legs[t].path, Pose(a.x, a.y, r.lb_legs[t].theta_dep),
      samples_per_segment));
  }
  for (std::size_t t = 0; t < r.feasible_legs.size(); ++t) {
    const Waypoint & a = inst.waypoints[idx[t]];
    fe_pts.push_back(integrate_path(r.feasible_legs[t], Pose(a.x, a.y, r.chosen_headings[t]),
      samples_per_segment));
  }
  for (const auto * set : {&lb_pts, &fe_pts}) {
    for (const auto & leg : *set) {
      for (const auto & p : leg) {
        all.emplace_back(p.x, p.y);
      }
    }
  }
  const detail::SvgFrame f = detail::fit_frame(all, kView, kMargin);
  const double wedge_r = std::max(12.0, 0.5 * inst.rho * f.scale);

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
    "viewBox=\"0 0 1000 1000\">\n";
  o << "  <rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"#ffffff\"/>\n";
  o << "  <g id=\"fov-wedges\" fill=\"#4c9be8\" fill-opacity=\"0.25\" stroke=\"#4c9be8\" "
    "stroke-width=\"0.8\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Waypoint & w = inst.waypoints[idx[i]];
    o << "    <path class=\"wedge\" data-id=\"" << w.id << "\" d=\"" <<
      detail::wedge_path(f, w, wedge_r) << "\"/>\n";
  }
  o << "  </g>\n";
  o << "  <g id=\"lower-bound-path\" fill=\"none\" stroke=\"#d9534f\" stroke-width=\"1.5\" "
    "stroke-dasharray=\"6 4\">\n";
  for (const auto & leg : lb_pts) {
    o << "    <polyline class=\"leg\" points=\"" << detail::polyline(f, leg) << "\"/>\n";
  }
  o << "  </g>\n";
  o << "  <g id=\"feasible-path\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2\">\n";
  for (const auto & leg : fe_pts) {
    o << "    <polyline class=\"leg\" points=\"" << detail::polyline(f, leg) << "\"/>\n";
  }
  o << "  </g>\n";
  o << "  <g id=\"waypoints\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Waypoint & w = inst.waypoints[idx[i]];
    o << "    <circle cx=\"" << detail::fmt3(f.x(w.x)) << "\" cy=\"" << detail::fmt3(f.y(w.y)) <<
      "\" r=\"4\" fill=\"#000000\"/>\n";
    o << "    <text x=\"" << detail::fmt3(f.x(w.x) + 6.0) << "\" y=\"" <<
      detail::fmt3(f.y(w.y) - 6.0) << "\">" << w.id << "</text>\n";
  }
  o << "  </g>\n";
  const std::string relaxed = doc.certified ? "lower-bounding path" : "heuristic relaxation path";
  o << "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"14\">\n";
  o << "    <line x1=\"20\" y1=\"20\" x2=\"60\" y2=\"20\" stroke=\"#d9534f\" stroke-width=\"1.5\" "
    "stroke-dasharray=\"6 4\"/>\n";
  o << "    <text x=\"68\" y=\"25\">" << relaxed << " (" << detail::fmt3(r.lower_bound) << ")</text>\n";
  o << "    <line x1=\"20\" y1=\"40\" x2=\"60\" y2=\"40\" stroke=\"#222222\" stroke-width=\"2\"/>\n";
  o << "    <text x=\"68\" y=\"45\">feasible path (" << detail::fmt3(r.feasible_length) << ")</text>\n";
  o << "    <text x=\"20\" y=\"65\">" << doc.variant << ", k = " << r.k << ", rho = " <<
    detail::fmt3(doc.rho) << "</text>\n";
  o << "  </g>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace rsfov

#endif  // RSFOV__SVG_HPP_
