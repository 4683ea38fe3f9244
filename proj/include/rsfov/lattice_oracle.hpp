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

#ifndef RSFOV__LATTICE_ORACLE_HPP_
#define RSFOV__LATTICE_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "rsfov/geometry.hpp"

namespace rsfov
{

/// \brief Discretization of the lattice search. All values in the units of the query.
struct LatticeResolution
{
  double xy_step{0.0};
  double theta_step{kTwoPi / 72.0};
  double primitive_length{0.0};
  /// Free space kept around the bounding box of start and goal, in turning radii.
  double window_margin{6.0};
  std::size_t max_expansions{40'000'000};

  /// xy_step = rho/50, theta_step = 2pi/72, primitive_length = rho*pi/36.
  static LatticeResolution defaults(double rho)
  {
    LatticeResolution r;
    r.xy_step = rho / 50.0;
    r.primitive_length = rho * kPi / 36.0;
    return r;
  }
};

/// \brief Search effort of one lattice_oracle call.
struct LatticeStats
{
  std::size_t expansions{0};
};

/// \brief Approximate shortest length by search over a discretized state lattice.
///
/// Motion primitives are exact maximum-curvature arcs of one heading step and
/// straights of `primitive_length` and of `xy_step`, all in either gear. Headings live
/// on the lattice {j * theta_step} plus a shifted copy aligned with the goal heading,
/// joined by the two partial arcs that bridge the offset. Positions are binned at
/// `xy_step`; the cheapest arrival in each (bin, heading) cell is kept and the open list
/// orders states by f = g + h quantized to 1e-4 turning radii. The search finishes with
/// one exact straight when a state on the goal heading has the goal within `xy_step` of
/// its heading line, or with one exact arc when its turning circle is within `xy_step`
/// of a goal turning circle; the residual offset is added to the cost. An expanded state
/// whose turning circle lies within four radii of a goal circle of the same steering may
/// also finish exactly with three free arcs through a circle tangent to both.
///
/// Error is O(xy_step + rho * theta_step) per primitive and shrinks with the steps. At
/// the default resolution the relative error against the exact length stays below 2%.
/// Throws SearchExhausted when the window or expansion budget runs out.
inline double lattice_oracle(
  const Pose & start, const Pose & goal, double rho, const LatticeResolution & res,
  LatticeStats * stats = nullptr)
{
  if (!(rho > 0.0)) {
    throw InvalidArgument("lattice_oracle: rho must be positive");
  }
  if (!(res.xy_step > 0.0) || !(res.theta_step > 0.0) || !(res.primitive_length > 0.0)) {
    throw InvalidArgument("lattice_oracle: steps must be positive");
  }
  const double nh_real = kTwoPi / res.theta_step;
  const int nh = static_cast<int>(std::lround(nh_real));
  if (nh < 4 || std::abs(nh_real - nh) > 1e-9) {
    throw InvalidArgument("lattice_oracle: theta_step must divide 2pi");
  }

  // Canonical frame, unit radius.
  const Pose g = to_local_frame(start, goal, rho);
  const double dth = kTwoPi / nh;
  const double cell = res.xy_step / rho;
  const double step = res.primitive_length / rho;
  const double gx = g.x;
  const double gy = g.y;
  const double g_sin = std::sin(g.theta);
  const double g_cos = std::cos(g.theta);

  int goal_j = static_cast<int>(std::floor(g.theta / dth));
  double offset = g.theta - goal_j * dth;
  if (offset < 1e-12) {
    offset = 0.0;
  } else if (dth - offset < 1e-12) {
    offset = 0.0;
    goal_j += 1;
  }
  goal_j = ((goal_j % nh) + nh) % nh;
  const int goal_sub = offset > 0.0 ? 1 : 0;

  const double lo_x = std::min(0.0, gx) - res.window_margin;
  const double hi_x = std::max(0.0, gx) + res.window_margin;
  const double lo_y = std::min(0.0, gy) - res.window_margin;
  const double hi_y = std::max(0.0, gy) + res.window_margin;

  // Heading tables for both sub-lattices.
  std::vector<double> cos_t(2 * nh), sin_t(2 * nh);
  for (int sub = 0; sub < 2; ++sub) {
    for (int j = 0; j < nh; ++j) {
      const double th = j * dth + (sub ? offset : 0.0);
      cos_t[sub * nh + j] = std::cos(th);
      sin_t[sub * nh + j] = std::sin(th);
    }
  }
  auto heading_gap = [&](int sub, int j) {
      // Exact angle between a lattice heading and the goal heading.
      int dj = std::abs(j - goal_j);
      dj = std::min(dj, nh - dj);
      double a = dj * dth;
      if (sub != goal_sub) {
        a = std::max(0.0, a - offset);
      }
      return a;
    };
  // Cheapest cost per (cell, heading), stored in lazily allocated square tiles so that
  // the successors of one state share memory.
  constexpr int kTile = 16;
  const int cells_x = static_cast<int>(std::ceil((hi_x - lo_x) / cell)) + 1;
  const int cells_y = static_cast<int>(std::ceil((hi_y - lo_y) / cell)) + 1;
  const int tiles_x = cells_x / kTile + 1;
  const int tiles_y = cells_y / kTile + 1;
  const std::size_t tile_size = static_cast<std::size_t>(kTile) * kTile * 2 * nh;
  std::vector<std::unique_ptr<float[]>> tiles(static_cast<std::size_t>(tiles_x) * tiles_y);
  auto slot = [&](double x, double y, int sub, int j) -> float & {
      const int cx = static_cast<int>((x - lo_x) / cell);
      const int cy = static_cast<int>((y - lo_y) / cell);
      auto & tile = tiles[static_cast<std::size_t>(cy / kTile) * tiles_x + cx / kTile];
      if (!tile) {
        tile = std::make_unique<float[]>(tile_size);
        std::fill(tile.get(), tile.get() + tile_size, std::numeric_limits<float>::infinity());
      }
      const std::size_t local = static_cast<std::size_t>((cy % kTile) * kTile + cx % kTile);
      return tile[(local * 2 + sub) * nh + j];
    };

  struct Node
  {
    double g;
    double x;
    double y;
    int sub;
    int j;  ///< negative for the finishing node
  };
  // Bucketed open list: f is quantized to `width`, each bucket is a LIFO stack.
  constexpr double width = 1e-4;
  const double f0 = std::max(std::hypot(gx, gy), heading_gap(0, 0));
  std::vector<std::vector<Node>> buckets;
  std::size_t current = 0;
  auto enqueue = [&](double f, const Node & n) {
      std::size_t b = f <= f0 ? 0 : static_cast<std::size_t>((f - f0) / width);
      b = std::max(b, current);
      if (b >= buckets.size()) {
        buckets.resize(b + 1024);
      }
      buckets[b].push_back(n);
    };
  // Cheapest finishing cost enqueued so far.
  double best_finish = std::numeric_limits<double>::infinity();
  auto finish = [&](double total, int sub) {
      if (total < best_finish) {
        best_finish = total;
        enqueue(total, Node{total, gx, gy, sub, -1});
      }
    };

  // Unsigned angle between two radius vectors of a unit circle.
  auto sweep = [](double ax, double ay, double bx, double by) {
      return std::abs(std::atan2(ax * by - ay * bx, ax * bx + ay * by));
    };

  auto push = [&](double x, double y, int sub, int j, double cost) {
      if (x < lo_x || x > hi_x || y < lo_y || y > hi_y) {
        return;
      }
      float & stored = slot(x, y, sub, j);
      const auto c32 = static_cast<float>(cost);
      if (stored <= c32) {
        return;
      }
      stored = c32;
      const double dx = gx - x;
      const double dy = gy - y;
      const double e = std::hypot(dx, dy);
      enqueue(cost + std::max(e, heading_gap(sub, j)), Node{cost, x, y, sub, j});
      const double c = cos_t[sub * nh + j];
      const double s = sin_t[sub * nh + j];
      if (sub == goal_sub && j == goal_j) {
        // Finish with an exact straight when the goal lies on the heading line.
        if (std::abs(-dx * s + dy * c) <= cell) {
          finish(cost + e, sub);
        }
      }
      // Finish with one arc when the turning circle is shared with the goal.
      const double turn = std::abs(angle_diff(g.theta, j * dth + (sub ? offset : 0.0)));
      for (int sigma = -1; sigma <= 1; sigma += 2) {
        const double miss = std::hypot(
          gx - sigma * g_sin - (x - sigma * s), gy + sigma * g_cos - (y + sigma * c));
        if (miss <= cell) {
          const double total = cost + turn + miss;
          finish(total, sub);
        }
      }
    };

  // Finish with three free arcs through a circle tangent to the current and goal circles.
  auto finish_three_arcs = [&](const Node & n) {
      const double x = n.x;
      const double y = n.y;
      const double cost = n.g;
      if (cost >= best_finish) {
        return;
      }
      const double c = cos_t[n.sub * nh + n.j];
      const double s = sin_t[n.sub * nh + n.j];
      for (int sigma = -1; sigma <= 1; sigma += 2) {
        const double c1x = x - sigma * s;
        const double c1y = y + sigma * c;
        const double cgx = gx - sigma * g_sin;
        const double cgy = gy + sigma * g_cos;
        const double ux = cgx - c1x;
        const double uy = cgy - c1y;
        const double d = std::hypot(ux, uy);
        if (d > 4.0 || d < 1e-12) {
          continue;
        }
        const double h = std::sqrt(std::max(0.0, 4.0 - 0.25 * d * d)) / d;
        for (int side = -1; side <= 1; side += 2) {
          const double cmx = 0.5 * (c1x + cgx) - side * h * uy;
          const double cmy = 0.5 * (c1y + cgy) + side * h * ux;
          const double t1x = 0.5 * (c1x + cmx);
          const double t1y = 0.5 * (c1y + cmy);
          const double t2x = 0.5 * (cmx + cgx);
          const double t2y = 0.5 * (cmy + cgy);
          const double total = cost +
            sweep(x - c1x, y - c1y, t1x - c1x, t1y - c1y) +
            sweep(t1x - cmx, t1y - cmy, t2x - cmx, t2y - cmy) +
            sweep(t2x - cgx, t2y - cgy, gx - cgx, gy - cgy);
          finish(total, n.sub);
        }
      }
    };

  // Arc of `angle` ending on lattice heading (sub, j). The end point depends only on
  // the steering direction; the gear follows from the sign of the turn.
  auto arc = [&](const Node & n, double angle, int sub, int j) {
      j = ((j % nh) + nh) % nh;
      const double s0 = sin_t[n.sub * nh + n.j];
      const double c0 = cos_t[n.sub * nh + n.j];
      const double s1 = sin_t[sub * nh + j];
      const double c1 = cos_t[sub * nh + j];
      for (int sigma = -1; sigma <= 1; sigma += 2) {
        push(n.x + sigma * (s1 - s0), n.y + sigma * (c0 - c1), sub, j, n.g + angle);
      }
    };

  push(0.0, 0.0, 0, 0, 0.0);
  std::size_t expansions = 0;
  while (true) {
    while (current < buckets.size() && buckets[current].empty()) {
      ++current;
    }
    if (current >= buckets.size()) {
      break;
    }
    const Node n = buckets[current].back();
    buckets[current].pop_back();
    if (n.j < 0) {
      if (stats) {
        stats->expansions = expansions;
      }
      return n.g * rho;
    }
    if (static_cast<float>(n.g) > slot(n.x, n.y, n.sub, n.j)) {
      continue;
    }
    if (++expansions > res.max_expansions) {
      throw SearchExhausted("lattice_oracle: expansion budget exhausted");
    }
    finish_three_arcs(n);
    const double c = cos_t[n.sub * nh + n.j];
    const double s = sin_t[n.sub * nh + n.j];
    push(n.x + step * c, n.y + step * s, n.sub, n.j, n.g + step);
    push(n.x - step * c, n.y - step * s, n.sub, n.j, n.g + step);
    push(n.x + cell * c, n.y + cell * s, n.sub, n.j, n.g + cell);
    push(n.x - cell * c, n.y - cell * s, n.sub, n.j, n.g + cell);
    arc(n, dth, n.sub, n.j + 1);
    arc(n, dth, n.sub, n.j - 1);
    if (offset > 0.0) {
      if (n.sub == 0) {
        arc(n, offset, 1, n.j);
        arc(n, dth - offset, 1, n.j - 1);
      } else {
        arc(n, offset, 0, n.j);
        arc(n, dth - offset, 0, n.j + 1);
      }
    }
  }
  throw SearchExhausted("lattice_oracle: goal unreachable inside the search window");
}

/// \brief lattice_oracle at the default resolution for `rho`.
inline double lattice_oracle(const Pose & start, const Pose & goal, double rho)
{
  return lattice_oracle(start, goal, rho, LatticeResolution::defaults(rho));
}

}  // namespace rsfov

#endif  // RSFOV__LATTICE_ORACLE_HPP_
