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

#ifndef RSFOV__SEQUENCED_PLANNER_HPP_
#define RSFOV__SEQUENCED_PLANNER_HPP_

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rsfov/instance.hpp"
#include "rsfov/parallel.hpp"
#include "rsfov/rs_interval.hpp"
#include "rsfov/rs_point.hpp"

namespace rsfov
{

/// \brief Split `interval` into k equal closed sectors, in increasing order.
inline std::vector<AngleInterval> partition_interval(const AngleInterval & interval, int k)
{
  if (k < 1) {
    throw InvalidArgument("partition_interval: k must be at least 1");
  }
  std::vector<AngleInterval> out;
  out.reserve(static_cast<std::size_t>(k));
  const double lo = interval.theta_min();
  const double w = interval.width();
  for (int j = 1; j <= k; ++j) {
    const double a = lo + (static_cast<double>(j - 1) / k) * w;
    const double b = j == k ? interval.theta_max() : lo + (static_cast<double>(j) / k) * w;
    out.emplace_back(a, b);
  }
  return out;
}

/// \brief Sector graph over a fixed visiting sequence.
///
/// Layer i holds the k sectors of waypoint sequence[i]; the edge from sector m of
/// layer i to sector l of layer i+1 carries the interval optimum between them.
struct LayeredGraph
{
  std::vector<int> sequence;
  std::vector<std::size_t> index;  ///< waypoint index of each layer
  std::vector<std::vector<AngleInterval>> sectors;  ///< per layer
  int k{1};
  double rho{1.0};
  std::vector<IntervalSolution> edges;  ///< (n-1) * k * k, row-major by (i, m, l)

  std::size_t layers() const {return sequence.size();}

  const IntervalSolution & edge(std::size_t i, int m, int l) const
  {
    return edges[(i * static_cast<std::size_t>(k) + static_cast<std::size_t>(m)) * k +
             static_cast<std::size_t>(l)];
  }
};

/// \brief Build the layered graph; the (n-1) k^2 interval solves run on `jobs` threads.
inline LayeredGraph build_layered_graph(
  const Instance & inst, const std::vector<int> & sequence, int k, unsigned jobs = 1,
  const IntervalOptions & opts = {})
{
  validate_instance(inst);
  if (k < 1) {
    throw InvalidArgument("build_layered_graph: k must be at least 1");
  }
  LayeredGraph g;
  g.sequence = sequence;
  g.index = sequence_indices(inst, sequence);
  g.k = k;
  g.rho = inst.rho;
  for (std::size_t i : g.index) {
    g.sectors.push_back(partition_interval(inst.waypoints[i].fov, k));
  }
  const std::size_t kk = static_cast<std::size_t>(k);
  const std::size_t n = g.index.size();
  g.edges.resize((n - 1) * kk * kk);
  parallel_for(g.edges.size(), resolve_jobs(jobs), [&](std::size_t e) {
      const std::size_t i = e / (kk * kk);
      const std::size_t m = (e / kk) % kk;
      const std::size_t l = e % kk;
      const Waypoint & a = inst.waypoints[g.index[i]];
      const Waypoint & b = inst.waypoints[g.index[i + 1]];
      g.edges[e] = solve_interval(
        IntervalQuery{{a.x, a.y}, g.sectors[i][m], {b.x, b.y}, g.sectors[i + 1][l], inst.rho},
        opts);
    });
  return g;
}

/// \brief Relaxed solution: one sector per waypoint, headings may jump at waypoints.
struct SequenceLowerBound
{
  double cost{0.0};
  std::vector<int> sectors;  ///< 0-based sector per layer
  std::vector<IntervalSolution> legs;
};

/// \brief Shortest layer-respecting path; ties go to the lexicographically smallest sectors.
inline SequenceLowerBound lower_bound_seq(const LayeredGraph & g)
{
  const std::size_t n = g.layers();
  const int k = g.k;
  // best[i][m]: cheapest completion from sector m of layer i, filled back to front.
  std::vector<std::vector<double>> best(n, std::vector<double>(static_cast<std::size_t>(k), 0.0));
  std::vector<std::vector<int>> next(n, std::vector<int>(static_cast<std::size_t>(k), -1));
  for (std::size_t i = n - 1; i-- > 0; ) {
    for (int m = 0; m < k; ++m) {
      double b = std::numeric_limits<double>::infinity();
      int arg = -1;
      for (int l = 0; l < k; ++l) {
        const double c = g.edge(i, m, l).length + best[i + 1][static_cast<std::size_t>(l)];
        if (c < b) {
          b = c;
          arg = l;
        }
      }
      best[i][static_cast<std::size_t>(m)] = b;
      next[i][static_cast<std::size_t>(m)] = arg;
    }
  }
  int m = 0;
  for (int c = 1; c < k; ++c) {
    if (best[0][static_cast<std::size_t>(c)] < best[0][static_cast<std::size_t>(m)]) {
      m = c;
    }
  }
  SequenceLowerBound lb;
  lb.sectors.push_back(m);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const int l = next[i][static_cast<std::size_t>(m)];
    lb.legs.push_back(g.edge(i, m, l));
    lb.cost += lb.legs.back().length;
    lb.sectors.push_back(l);
    m = l;
  }
  return lb;
}

/// \brief Feasible solution of either planning variant.
struct PlanResult
{
  std::vector<int> sequence;
  int k{1};
  bool closed{false};  ///< tour variant: the last leg returns to sequence[0]
  double lower_bound{0.0};
  double feasible_length{0.0};
  std::vector<int> lb_sectors;
  std::vector<IntervalSolution> lb_legs;
  std::vector<double> chosen_headings;  ///< per waypoint in sequence order, inside its window
  std::vector<RsPath> feasible_legs;
  double theoretical_gap{0.0};
  double deviation_pct{0.0};
  double theoretical_deviation_pct{0.0};
};

namespace detail
{

/// \brief Percentage of `part` relative to `base`; zero when base is zero.
inline double percent(double part, double base)
{
  return base > 0.0 ? 100.0 * part / base : 0.0;
}

/// \brief Leg between fixed headings. Reuses the relaxed leg when its headings match
/// and it is not longer than the point-to-point optimum.
inline RsPath fixed_leg(
  const Waypoint & a, double th_a, const Waypoint & b, double th_b, double rho,
  const IntervalSolution & relaxed)
{
  RsPath p = solve_p2p(Pose(a.x, a.y, th_a), Pose(b.x, b.y, th_b), rho);
  if (relaxed.theta_dep == th_a && relaxed.theta_arr == th_b && relaxed.length <= p.length) {
    return relaxed.path;
  }
  return p;
}

/// \brief Chain repair over legs[0..L) through waypoints w[0..L].
///
/// Waypoint 0 is pinned to `first`, waypoint L to `last`; each waypoint in between picks
/// its arrival (option 0) or departure (option 1) heading. Ties go to the arrival.
inline std::pair<double, std::vector<double>> repair_chain(
  const std::vector<const Waypoint *> & w, const std::vector<IntervalSolution> & legs,
  double first, double last, double rho, std::vector<RsPath> * paths)
{
  const std::size_t L = legs.size();
  // Heading options per waypoint.
  std::vector<std::vector<double>> opt(L + 1);
  opt[0] = {first};
  opt[L] = {last};
  for (std::size_t i = 1; i < L; ++i) {
    opt[i] = {legs[i - 1].theta_arr, legs[i].theta_dep};
  }
  // leg_paths[i][a][b]: path for leg i from option a to option b.
  std::vector<std::vector<std::vector<RsPath>>> leg_paths(L);
  for (std::size_t i = 0; i < L; ++i) {
    leg_paths[i].resize(opt[i].size());
    for (std::size_t a = 0; a < opt[i].size(); ++a) {
      for (std::size_t b = 0; b < opt[i + 1].size(); ++b) {
        leg_paths[i][a].push_back(fixed_leg(*w[i], opt[i][a], *w[i + 1], opt[i + 1][b], rho, legs[i]));
      }
    }
  }
  std::vector<std::vector<double>> cost(L + 1);
  std::vector<std::vector<std::size_t>> prev(L + 1);
  cost[0] = {0.0};
  prev[0] = {0};
  for (std::size_t i = 1; i <= L; ++i) {
    cost[i].assign(opt[i].size(), std::numeric_limits<double>::infinity());
    prev[i].assign(opt[i].size(), 0);
    for (std::size_t b = 0; b < opt[i].size(); ++b) {
      for (std::size_t a = 0; a < opt[i - 1].size(); ++a) {
        const double c = cost[i - 1][a] + leg_paths[i - 1][a][b].length;
        if (c < cost[i][b]) {
          cost[i][b] = c;
          prev[i][b] = a;
        }
      }
    }
  }
  std::vector<std::size_t> choice(L + 1, 0);
  for (std::size_t i = L; i > 0; --i) {
    choice[i - 1] = prev[i][choice[i]];
  }
  std::vector<double> headings;
  for (std::size_t i = 0; i <= L; ++i) {
    headings.push_back(opt[i][choice[i]]);
  }
  double total = 0.0;
  if (paths) {
    paths->clear();
  }
  for (std::size_t i = 0; i < L; ++i) {
    const RsPath & p = leg_paths[i][choice[i]][choice[i + 1]];
    total += p.length;
    if (paths) {
      paths->push_back(p);
    }
  }
  return {total, headings};
}

/// \brief Throws InvariantViolation unless the result is a feasible, chained plan inside
/// its certified sandwich.
inline void audit_plan(const Instance & inst, const PlanResult & r)
{
  const double slack = 1e-9 * std::max(1.0, r.lower_bound);
  if (!(r.lower_bound <= r.feasible_length + slack)) {
    throw InvariantViolation("plan: lower bound exceeds feasible length");
  }
  if (!(r.feasible_length <= r.lower_bound + r.theoretical_gap + slack)) {
    throw InvariantViolation("plan: feasible length exceeds the certified gap");
  }
  const auto idx = sequence_indices(inst, r.sequence);
  const std::size_t n = idx.size();
  const std::size_t legs = r.closed ? n : n - 1;
  if (r.chosen_headings.size() != n || r.feasible_legs.size() != legs) {
    throw InvariantViolation("plan: malformed result");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(inst.waypoints[idx[i]].fov, r.chosen_headings[i], 1e-9)) {
      throw InvariantViolation("plan: heading outside its field of view");
    }
  }
  for (std::size_t i = 0; i < legs; ++i) {
    const Waypoint & a = inst.waypoints[idx[i]];
    const Waypoint & b = inst.waypoints[idx[(i + 1) % n]];
    const Pose end = path_endpoint(r.feasible_legs[i], Pose(a.x, a.y, r.chosen_headings[i]));
    const Pose want(b.x, b.y, r.chosen_headings[(i + 1) % n]);
    if (position_error(end, want) > 1e-6 * inst.rho || heading_error(end, want) > 1e-6) {
      throw InvariantViolation("plan: leg does not reach the next waypoint");
    }
  }
}

}  // namespace detail

/// \brief Certified gap for a fixed sequence: 3 rho sum of interior widths / k.
inline double theoretical_gap_seq(const Instance & inst, const std::vector<int> & sequence, int k)
{
  if (k < 1) {
    throw InvalidArgument("theoretical_gap_seq: k must be at least 1");
  }
  const auto idx = sequence_indices(inst, sequence);
  if (idx.size() <= 2) {
    return 0.0;
  }
  const std::vector<std::size_t> interior(idx.begin() + 1, idx.end() - 1);
  return 3.0 * inst.rho * width_sum(inst, interior) / k;
}

/// \brief Pick one heading per waypoint from the relaxed solution and join them with
/// shortest point-to-point legs.
inline PlanResult repair_to_feasible(
  const Instance & inst, const std::vector<int> & sequence, const SequenceLowerBound & lb, int k)
{
  const auto idx = sequence_indices(inst, sequence);
  if (lb.legs.size() + 1 != idx.size()) {
    throw InvalidArgument("repair_to_feasible: lower bound does not match the sequence");
  }
  std::vector<const Waypoint *> w;
  for (std::size_t i : idx) {
    w.push_back(&inst.waypoints[i]);
  }
  PlanResult r;
  r.sequence = sequence;
  r.k = k;
  r.lower_bound = lb.cost;
  r.lb_sectors = lb.sectors;
  r.lb_legs = lb.legs;
  auto [total, headings] = detail::repair_chain(
    w, lb.legs, lb.legs.front().theta_dep, lb.legs.back().theta_arr, inst.rho, &r.feasible_legs);
  r.feasible_length = total;
  r.chosen_headings = std::move(headings);
  r.theoretical_gap = theoretical_gap_seq(inst, sequence, k);
  r.deviation_pct = detail::percent(r.feasible_length - r.lower_bound, r.lower_bound);
  r.theoretical_deviation_pct = detail::percent(r.theoretical_gap, r.lower_bound);
  return r;
}

/// \brief Lower bound, feasible path and certificate for a fixed visiting sequence.
inline PlanResult plan_sequence(
  const Instance & inst, const std::vector<int> & sequence, int k, unsigned jobs = 1,
  const IntervalOptions & opts = {})
{
  const LayeredGraph g = build_layered_graph(inst, sequence, k, jobs, opts);
  const PlanResult r = repair_to_feasible(inst, sequence, lower_bound_seq(g), k);
  detail::audit_plan(inst, r);
  return r;
}

}  // namespace rsfov

#endif  // RSFOV__SEQUENCED_PLANNER_HPP_
