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

#ifndef RSFOV__INSTANCE_HPP_
#define RSFOV__INSTANCE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rsfov/geometry.hpp"

namespace rsfov
{

struct Waypoint
{
  int id{0};
  double x{0.0};
  double y{0.0};
  AngleInterval fov;

  bool operator==(const Waypoint &) const = default;
};

/// \brief Waypoints with heading windows and a common turning radius.
struct Instance
{
  std::vector<Waypoint> waypoints;
  double rho{1.0};

  std::size_t size() const {return waypoints.size();}

  bool operator==(const Instance &) const = default;
};

/// \brief Throws InvalidArgument unless n >= 2, ids are unique and rho > 0.
inline void validate_instance(const Instance & inst)
{
  if (!(inst.rho > 0.0) || !std::isfinite(inst.rho)) {
    throw InvalidArgument("instance: rho must be positive");
  }
  if (inst.waypoints.size() < 2) {
    throw InvalidArgument("instance: at least 2 waypoints required");
  }
  std::set<int> ids;
  for (const auto & w : inst.waypoints) {
    if (!std::isfinite(w.x) || !std::isfinite(w.y)) {
      throw InvalidArgument("instance: non-finite waypoint position");
    }
    if (!ids.insert(w.id).second) {
      throw InvalidArgument("instance: duplicate waypoint id " + std::to_string(w.id));
    }
  }
}

/// \brief Index of each id in `sequence`, validated to be a permutation of the ids.
inline std::vector<std::size_t> sequence_indices(const Instance & inst, const std::vector<int> & sequence)
{
  if (sequence.size() != inst.size()) {
    throw InvalidArgument("sequence: length differs from the number of waypoints");
  }
  std::vector<std::size_t> idx;
  std::vector<bool> seen(inst.size(), false);
  for (int id : sequence) {
    const auto it = std::find_if(
      inst.waypoints.begin(), inst.waypoints.end(), [id](const Waypoint & w) {return w.id == id;});
    if (it == inst.waypoints.end()) {
      throw InvalidArgument("sequence: unknown id " + std::to_string(id));
    }
    const auto i = static_cast<std::size_t>(it - inst.waypoints.begin());
    if (seen[i]) {
      throw InvalidArgument("sequence: repeated id " + std::to_string(id));
    }
    seen[i] = true;
    idx.push_back(i);
  }
  return idx;
}

/// \brief Random instance parameters. Defaults follow the published protocol.
struct GenerationConfig
{
  int n{20};
  double area_side{1000.0};
  double rho{100.0};
  double fov_width{kHalfPi};
  double theta_min_range{1.5 * kPi};
  std::uint64_t seed{1};
};

/// \brief Uniform double in [0, 1) from the top 53 bits of one 64-bit draw.
inline double unit_uniform(std::mt19937_64 & rng)
{
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// \brief Waypoint i (id i+1) draws x, y, theta_min in that order from mt19937_64(seed).
inline Instance generate_instance(const GenerationConfig & cfg)
{
  if (cfg.n < 2) {
    throw InvalidArgument("generate_instance: n must be at least 2");
  }
  if (!(cfg.area_side > 0.0) || !(cfg.rho > 0.0) || !(cfg.fov_width >= 0.0) ||
    cfg.fov_width > kTwoPi || !(cfg.theta_min_range >= 0.0))
  {
    throw InvalidArgument("generate_instance: invalid configuration");
  }
  std::mt19937_64 rng(cfg.seed);
  Instance inst;
  inst.rho = cfg.rho;
  for (int i = 0; i < cfg.n; ++i) {
    const double x = unit_uniform(rng) * cfg.area_side;
    const double y = unit_uniform(rng) * cfg.area_side;
    const double th = unit_uniform(rng) * cfg.theta_min_range;
    inst.waypoints.push_back(Waypoint{i + 1, x, y, AngleInterval(th, th + cfg.fov_width)});
  }
  return inst;
}

namespace detail
{

inline double tour_length(const std::vector<std::size_t> & t, const std::vector<std::vector<double>> & d)
{
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    s += d[t[i]][t[(i + 1) % t.size()]];
  }
  return s;
}

}  // namespace detail

/// \brief Closed Euclidean tour: nearest neighbour from the lowest id, then
/// first-improvement 2-opt until no exchange shortens it by more than 1e-9.
///
/// The result starts at the lowest id and its second entry is the lower-id neighbour.
inline std::vector<int> euclidean_tsp_tour(const Instance & inst)
{
  validate_instance(inst);
  const std::size_t n = inst.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = std::hypot(
        inst.waypoints[i].x - inst.waypoints[j].x, inst.waypoints[i].y - inst.waypoints[j].y);
    }
  }
  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (inst.waypoints[i].id < inst.waypoints[first].id) {
      first = i;
    }
  }
  // Nearest neighbour; ties go to the lower id.
  std::vector<std::size_t> tour{first};
  std::vector<bool> used(n, false);
  used[first] = true;
  while (tour.size() < n) {
    const std::size_t cur = tour.back();
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) {
        continue;
      }
      if (best == n || d[cur][j] < d[cur][best] ||
        (d[cur][j] == d[cur][best] && inst.waypoints[j].id < inst.waypoints[best].id))
      {
        best = j;
      }
    }
    used[best] = true;
    tour.push_back(best);
  }
  // 2-opt: reverse tour[i+1..j].
  if (n >= 4) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i + 2 < n && !improved; ++i) {
        for (std::size_t j = i + 2; j < n && !improved; ++j) {
          const std::size_t a = tour[i], b = tour[i + 1];
          const std::size_t c = tour[j], e = tour[(j + 1) % n];
          if (a == e) {
            continue;
          }
          const double delta = d[a][c] + d[b][e] - d[a][b] - d[c][e];
          if (delta < -1e-9) {
            std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(i + 1),
              tour.begin() + static_cast<std::ptrdiff_t>(j + 1));
            improved = true;
          }
        }
      }
    }
  }
  // Canonical rotation and direction.
  const auto pos = std::find(tour.begin(), tour.end(), first);
  std::rotate(tour.begin(), pos, tour.end());
  if (n >= 3 && inst.waypoints[tour.back()].id < inst.waypoints[tour[1]].id) {
    std::reverse(tour.begin() + 1, tour.end());
  }
  std::vector<int> ids;
  for (std::size_t i : tour) {
    ids.push_back(inst.waypoints[i].id);
  }
  return ids;
}

/// \brief Visiting sequence from the Euclidean tour, opened at its longest edge and
/// improved by open-path 2-opt.
///
/// Ties between equally long edges prefer the closing edge, then the earliest edge.
/// The open path is read from its lower-id end.
inline std::vector<int> euclidean_tsp_sequence(const Instance & inst)
{
  const std::vector<int> tour = euclidean_tsp_tour(inst);
  const std::size_t n = tour.size();
  if (n == 2) {
    return tour;
  }
  auto pos = [&](int id) {
      const auto it = std::find_if(
        inst.waypoints.begin(), inst.waypoints.end(), [id](const Waypoint & w) {return w.id == id;});
      return std::pair<double, double>{it->x, it->y};
    };
  auto len = [&](std::size_t e) {
      const auto [ax, ay] = pos(tour[e]);
      const auto [bx, by] = pos(tour[(e + 1) % n]);
      return std::hypot(ax - bx, ay - by);
    };
  // Edge e joins tour[e] and tour[e+1]; edge n-1 is the closing edge.
  std::size_t cut = n - 1;
  for (std::size_t e = 0; e + 1 < n; ++e) {
    if (len(e) > len(cut)) {
      cut = e;
    }
  }
  std::vector<int> seq;
  for (std::size_t i = 1; i <= n; ++i) {
    seq.push_back(tour[(cut + i) % n]);
  }
  // Open-path 2-opt: reverse seq[i+1..j]; j = n-1 reverses a free tail.
  auto d = [&](int a, int b) {
      const auto [ax, ay] = pos(a);
      const auto [bx, by] = pos(b);
      return std::hypot(ax - bx, ay - by);
    };
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i + 2 < n && !improved; ++i) {
      for (std::size_t j = i + 2; j < n && !improved; ++j) {
        const double before = d(seq[i], seq[i + 1]) + (j + 1 < n ? d(seq[j], seq[j + 1]) : 0.0);
        const double after = d(seq[i], seq[j]) + (j + 1 < n ? d(seq[i + 1], seq[j + 1]) : 0.0);
        if (after - before < -1e-9) {
          std::reverse(seq.begin() + static_cast<std::ptrdiff_t>(i + 1),
            seq.begin() + static_cast<std::ptrdiff_t>(j + 1));
          improved = true;
        }
      }
    }
  }
  if (seq.back() < seq.front()) {
    std::reverse(seq.begin(), seq.end());
  }
  return seq;
}

/// \brief Sum of window widths over `ids`.
inline double width_sum(const Instance & inst, const std::vector<std::size_t> & idx)
{
  double s = 0.0;
  for (std::size_t i : idx) {
    s += inst.waypoints[i].fov.width();
  }
  return s;
}

}  // namespace rsfov

#endif  // RSFOV__INSTANCE_HPP_
