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

#ifndef RSFOV__TOUR_PLANNER_HPP_
#define RSFOV__TOUR_PLANNER_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "rsfov/sequenced_planner.hpp"

namespace rsfov
{

/// \brief One-in-a-set TSP over (waypoint, sector) nodes.
///
/// Node (i, m) is sector m of waypoint i in instance order; its flat index is i*k + m.
struct GtspInstance
{
  std::vector<int> ids;
  std::vector<std::vector<AngleInterval>> sectors;
  int k{1};
  double rho{1.0};
  std::vector<IntervalSolution> legs;  ///< (nk)^2 entries; same-set entries unused

  std::size_t sets() const {return ids.size();}
  std::size_t nodes() const {return ids.size() * static_cast<std::size_t>(k);}

  const IntervalSolution & leg(std::size_t i, int m, std::size_t j, int l) const
  {
    const std::size_t kk = static_cast<std::size_t>(k);
    return legs[(i * kk + static_cast<std::size_t>(m)) * nodes() + j * kk + static_cast<std::size_t>(l)];
  }
  double cost(std::size_t i, int m, std::size_t j, int l) const {return leg(i, m, j, l).length;}
};

namespace detail
{

/// \brief Interval solution of the reversed query, obtained by path reversal.
inline IntervalSolution reversed(const IntervalSolution & s)
{
  IntervalSolution r = s;
  r.theta_dep = s.theta_arr;
  r.theta_arr = s.theta_dep;
  r.path = reverse_path(s.path);
  r.case_tag = swap_case(s.case_tag);
  return r;
}

}  // namespace detail

/// \brief Directed interval costs between all sector pairs of distinct waypoints.
///
/// Each unordered pair is solved once; the opposite direction is its path reversal, so
/// the matrix is exactly symmetric.
inline GtspInstance build_gtsp(
  const Instance & inst, int k, unsigned jobs = 1, const IntervalOptions & opts = {})
{
  validate_instance(inst);
  if (inst.size() < 3) {
    throw InvalidArgument("build_gtsp: a tour needs at least 3 waypoints");
  }
  if (k < 1) {
    throw InvalidArgument("build_gtsp: k must be at least 1");
  }
  GtspInstance g;
  g.k = k;
  g.rho = inst.rho;
  for (const auto & w : inst.waypoints) {
    g.ids.push_back(w.id);
    g.sectors.push_back(partition_interval(w.fov, k));
  }
  const std::size_t n = inst.size();
  const std::size_t kk = static_cast<std::size_t>(k);
  const std::size_t N = n * kk;
  g.legs.resize(N * N);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
    }
  }
  parallel_for(pairs.size() * kk * kk, resolve_jobs(jobs), [&](std::size_t e) {
      const auto [i, j] = pairs[e / (kk * kk)];
      const std::size_t m = (e / kk) % kk;
      const std::size_t l = e % kk;
      const Waypoint & a = inst.waypoints[i];
      const Waypoint & b = inst.waypoints[j];
      const IntervalSolution s = solve_interval(
        IntervalQuery{{a.x, a.y}, g.sectors[i][m], {b.x, b.y}, g.sectors[j][l], inst.rho}, opts);
      g.legs[(i * kk + m) * N + j * kk + l] = s;
      g.legs[(j * kk + l) * N + i * kk + m] = detail::reversed(s);
    });
  return g;
}

/// \brief Asymmetric TSP produced by the Noon-Bean transformation.
struct AtspMatrix
{
  std::size_t n_sets{0};
  int k{1};
  double offset{0.0};  ///< M added to every inter-set arc
  std::vector<std::vector<double>> cost;  ///< +infinity marks a forbidden arc
};

/// \brief Noon-Bean transformation of a one-in-a-set TSP.
///
/// Within a set the arcs (i, m) -> (i, m+1 mod k) cost zero; an arc leaving (i, m) for
/// (j, l) costs c((i, m+1 mod k), (j, l)) + M with M = 1 + sum of all costs. An optimal
/// tour enters each set once, and the entry node is the selected sector.
inline AtspMatrix noon_bean_transform(const GtspInstance & g)
{
  const std::size_t n = g.sets();
  const int k = g.k;
  const std::size_t N = g.nodes();
  const double inf = std::numeric_limits<double>::infinity();
  AtspMatrix a;
  a.n_sets = n;
  a.k = k;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      for (int m = 0; m < k; ++m) {
        for (int l = 0; l < k; ++l) {
          total += g.cost(i, m, j, l);
        }
      }
    }
  }
  a.offset = 1.0 + total;
  a.cost.assign(N, std::vector<double>(N, inf));
  for (std::size_t i = 0; i < n; ++i) {
    for (int m = 0; m < k; ++m) {
      const std::size_t u = i * static_cast<std::size_t>(k) + static_cast<std::size_t>(m);
      const int succ = (m + 1) % k;
      if (k > 1) {
        a.cost[u][i * static_cast<std::size_t>(k) + static_cast<std::size_t>(succ)] = 0.0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) {
          continue;
        }
        for (int l = 0; l < k; ++l) {
          a.cost[u][j * static_cast<std::size_t>(k) + static_cast<std::size_t>(l)] =
            g.cost(i, succ, j, l) + a.offset;
        }
      }
    }
  }
  return a;
}

/// \brief Selection of one sector per waypoint in cyclic visiting order.
struct GtspTour
{
  std::vector<std::size_t> order;  ///< waypoint indices (instance order)
  std::vector<int> sectors;  ///< sector of order[t]
  double value{0.0};
};

/// \brief Sum of the cyclic tour costs in the original matrix.
inline double gtsp_tour_value(const GtspInstance & g, const GtspTour & t)
{
  double s = 0.0;
  const std::size_t n = t.order.size();
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t b = (a + 1) % n;
    s += g.cost(t.order[a], t.sectors[a], t.order[b], t.sectors[b]);
  }
  return s;
}

/// \brief Map an ATSP successor permutation (one Hamiltonian cycle) back to the GTSP.
inline GtspTour decode_atsp_tour(const GtspInstance & g, const std::vector<std::size_t> & succ)
{
  const std::size_t k = static_cast<std::size_t>(g.k);
  const std::size_t N = succ.size();
  GtspTour t;
  std::vector<std::size_t> pred(N);
  for (std::size_t u = 0; u < N; ++u) {
    pred[succ[u]] = u;
  }
  // Set entries are the nodes whose predecessor lies in another set.
  std::size_t start = 0;
  while (start < N && pred[start] / k == start / k) {
    ++start;
  }
  if (start == N) {
    throw InvariantViolation("noon-bean: tour never leaves a set");
  }
  std::size_t u = start;
  do {
    if (pred[u] / k != u / k) {
      t.order.push_back(u / k);
      t.sectors.push_back(static_cast<int>(u % k));
    }
    u = succ[u];
  } while (u != start);
  if (t.order.size() != g.sets()) {
    throw InvariantViolation("noon-bean: tour does not visit every set once");
  }
  t.value = gtsp_tour_value(g, t);
  return t;
}

namespace detail
{

/// \brief Minimum-cost assignment (rows to columns) with +infinity for forbidden cells.
/// Returns false when no finite assignment exists.
inline bool hungarian(
  const std::vector<std::vector<double>> & a, std::vector<std::size_t> & row_to_col, double & value)
{
  const std::size_t n = a.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) {
          continue;
        }
        const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (delta == inf) {
        return false;
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  row_to_col.assign(n, 0);
  value = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    row_to_col[p[j] - 1] = j - 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    value += a[i][row_to_col[i]];
  }
  return true;
}

/// \brief Cycles of a successor permutation, each starting at its lowest node.
inline std::vector<std::vector<std::size_t>> cycles_of(const std::vector<std::size_t> & succ)
{
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(succ.size(), false);
  for (std::size_t s = 0; s < succ.size(); ++s) {
    if (seen[s]) {
      continue;
    }
    std::vector<std::size_t> c;
    for (std::size_t u = s; !seen[u]; u = succ[u]) {
      seen[u] = true;
      c.push_back(u);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// \brief Exact ATSP by depth-first branch and bound with assignment bounds.
///
/// Subtours are broken by branching on the arcs e_1..e_t of the shortest subtour: child r
/// excludes e_r and fixes e_1..e_{r-1}.
inline std::vector<std::size_t> solve_atsp_exact(const std::vector<std::vector<double>> & c0)
{
  const double inf = std::numeric_limits<double>::infinity();
  const std::size_t N = c0.size();
  std::vector<std::size_t> best_succ;
  double best = inf;

  struct Frame
  {
    std::vector<std::vector<double>> c;
    std::vector<std::size_t> succ;
    double value;
  };
  std::vector<Frame> stack;
  {
    Frame root{c0, {}, 0.0};
    if (!hungarian(root.c, root.succ, root.value)) {
      throw InvariantViolation("atsp: no finite assignment");
    }
    stack.push_back(std::move(root));
  }
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (!(f.value < best)) {
      continue;
    }
    auto cyc = cycles_of(f.succ);
    if (cyc.size() == 1) {
      best = f.value;
      best_succ = f.succ;
      continue;
    }
    const auto shortest = std::min_element(
      cyc.begin(), cyc.end(), [](const auto & a, const auto & b) {return a.size() < b.size();});
    const std::vector<std::size_t> & sub = *shortest;
    std::vector<Frame> kids;
    for (std::size_t r = 0; r < sub.size(); ++r) {
      Frame child{f.c, {}, 0.0};
      for (std::size_t q = 0; q < r; ++q) {
        const std::size_t from = sub[q];
        const std::size_t to = sub[(q + 1) % sub.size()];
        for (std::size_t x = 0; x < N; ++x) {
          if (x != to) {
            child.c[from][x] = inf;
          }
          if (x != from) {
            child.c[x][to] = inf;
          }
        }
      }
      child.c[sub[r]][sub[(r + 1) % sub.size()]] = inf;
      if (hungarian(child.c, child.succ, child.value) && child.value < best) {
        kids.push_back(std::move(child));
      }
    }
    // The cheapest bound ends on top of the stack.
    std::stable_sort(kids.begin(), kids.end(), [](const Frame & a, const Frame & b) {
        return a.value > b.value;
      });
    for (auto & kid : kids) {
      stack.push_back(std::move(kid));
    }
  }
  if (best_succ.empty()) {
    throw InvariantViolation("atsp: no Hamiltonian cycle found");
  }
  return best_succ;
}

/// \brief Minimum cyclic value over sector choices for a fixed waypoint order, with the
/// sectors attaining it. Ties go to the smallest sector indices.
inline std::pair<double, std::vector<int>> best_sectors_cyclic(
  const GtspInstance & g, const std::vector<std::size_t> & order)
{
  const std::size_t n = order.size();
  const int k = g.k;
  const double inf = std::numeric_limits<double>::infinity();
  double best = inf;
  std::vector<int> best_sec;
  std::vector<std::vector<double>> d(n, std::vector<double>(static_cast<std::size_t>(k)));
  std::vector<std::vector<int>> from(n, std::vector<int>(static_cast<std::size_t>(k), 0));
  for (int m1 = 0; m1 < k; ++m1) {
    for (int l = 0; l < k; ++l) {
      d[0][static_cast<std::size_t>(l)] = l == m1 ? 0.0 : inf;
    }
    for (std::size_t t = 1; t < n; ++t) {
      for (int l = 0; l < k; ++l) {
        double b = inf;
        int arg = 0;
        for (int m = 0; m < k; ++m) {
          const double prev = d[t - 1][static_cast<std::size_t>(m)];
          if (prev == inf) {
            continue;
          }
          const double c = prev + g.cost(order[t - 1], m, order[t], l);
          if (c < b) {
            b = c;
            arg = m;
          }
        }
        d[t][static_cast<std::size_t>(l)] = b;
        from[t][static_cast<std::size_t>(l)] = arg;
      }
    }
    double close = inf;
    int last = 0;
    for (int l = 0; l < k; ++l) {
      const double c = d[n - 1][static_cast<std::size_t>(l)] + g.cost(order[n - 1], l, order[0], m1);
      if (c < close) {
        close = c;
        last = l;
      }
    }
    if (close < best) {
      best = close;
      best_sec.assign(n, 0);
      best_sec[n - 1] = last;
      for (std::size_t t = n - 1; t > 0; --t) {
        best_sec[t - 1] = from[t][static_cast<std::size_t>(best_sec[t])];
      }
    }
  }
  return {best, best_sec};
}

/// \brief Start at the lowest id; second entry has the lower id of the two neighbours.
inline GtspTour canonical_tour(const GtspInstance & g, GtspTour t)
{
  const std::size_t n = t.order.size();
  std::size_t s = 0;
  for (std::size_t a = 1; a < n; ++a) {
    if (g.ids[t.order[a]] < g.ids[t.order[s]]) {
      s = a;
    }
  }
  std::rotate(t.order.begin(), t.order.begin() + static_cast<std::ptrdiff_t>(s), t.order.end());
  std::rotate(t.sectors.begin(), t.sectors.begin() + static_cast<std::ptrdiff_t>(s), t.sectors.end());
  if (n >= 3 && g.ids[t.order[n - 1]] < g.ids[t.order[1]]) {
    std::reverse(t.order.begin() + 1, t.order.end());
    std::reverse(t.sectors.begin() + 1, t.sectors.end());
  }
  t.value = gtsp_tour_value(g, t);
  return t;
}

}  // namespace detail

enum class TourMode { Exact, Heuristic };

/// \brief Relaxed tour: visiting order, sector choices and the legs between them.
struct TourLowerBound
{
  TourMode mode{TourMode::Exact};
  bool certified{true};  ///< false in heuristic mode: the value is not a lower bound
  double value{0.0};
  std::vector<int> sequence;  ///< waypoint ids, cyclic
  std::vector<int> sectors;
  std::vector<IntervalSolution> legs;  ///< legs[t] joins sequence[t] to sequence[t+1 mod n]
};

/// \brief Largest n*k accepted by the exact mode.
inline constexpr std::size_t kExactNodeLimit = 24;

/// \brief Exact one-in-a-set tour by branch and bound on the Noon-Bean ATSP.
inline GtspTour solve_gtsp_exact(const GtspInstance & g)
{
  if (g.nodes() > kExactNodeLimit) {
    throw SizeLimitExceeded(
      "exact tour mode supports n*k <= " + std::to_string(kExactNodeLimit) + ", got " +
      std::to_string(g.nodes()));
  }
  const AtspMatrix a = noon_bean_transform(g);
  return detail::canonical_tour(g, decode_atsp_tour(g, detail::solve_atsp_exact(a.cost)));
}

/// \brief Nearest neighbour over sets, then 2-opt and or-opt moves on the visiting order;
/// every order is scored with its best cyclic sector choice.
inline GtspTour solve_gtsp_heuristic(const GtspInstance & g)
{
  const std::size_t n = g.sets();
  const int k = g.k;
  auto set_cost = [&](std::size_t i, std::size_t j) {
      double b = std::numeric_limits<double>::infinity();
      for (int m = 0; m < k; ++m) {
        for (int l = 0; l < k; ++l) {
          b = std::min(b, g.cost(i, m, j, l));
        }
      }
      return b;
    };
  std::vector<std::vector<double>> sc(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        sc[i][j] = set_cost(i, j);
      }
    }
  }
  std::size_t first = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (g.ids[i] < g.ids[first]) {
      first = i;
    }
  }
  std::vector<std::size_t> order{first};
  std::vector<bool> used(n, false);
  used[first] = true;
  while (order.size() < n) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (!used[j] && (best == n || sc[order.back()][j] < sc[order.back()][best] ||
        (sc[order.back()][j] == sc[order.back()][best] && g.ids[j] < g.ids[best])))
      {
        best = j;
      }
    }
    used[best] = true;
    order.push_back(best);
  }
  auto score = [&](const std::vector<std::size_t> & o) {
      return detail::best_sectors_cyclic(g, o).first;
    };
  double cur = score(order);
  const double eps = 1e-9 * std::max(1.0, cur);
  bool improved = true;
  while (improved) {
    improved = false;
    // 2-opt: reverse order[i..j].
    for (std::size_t i = 1; i + 1 < n && !improved; ++i) {
      for (std::size_t j = i + 1; j < n && !improved; ++j) {
        std::vector<std::size_t> cand = order;
        std::reverse(cand.begin() + static_cast<std::ptrdiff_t>(i),
          cand.begin() + static_cast<std::ptrdiff_t>(j + 1));
        const double v = score(cand);
        if (v < cur - eps) {
          order = std::move(cand);
          cur = v;
          improved = true;
        }
      }
    }
    // or-opt: move a block of 1..3 consecutive waypoints elsewhere.
    for (std::size_t len = 1; len <= 3 && !improved; ++len) {
      for (std::size_t i = 1; i + len <= n && !improved; ++i) {
        std::vector<std::size_t> rest(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i));
        rest.insert(rest.end(), order.begin() + static_cast<std::ptrdiff_t>(i + len), order.end());
        const std::vector<std::size_t> block(
          order.begin() + static_cast<std::ptrdiff_t>(i),
          order.begin() + static_cast<std::ptrdiff_t>(i + len));
        for (std::size_t pos = 1; pos <= rest.size() && !improved; ++pos) {
          if (pos == i) {
            continue;
          }
          for (int dir = 0; dir < 2 && !improved; ++dir) {
            std::vector<std::size_t> cand = rest;
            if (dir == 0) {
              cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(pos), block.begin(), block.end());
            } else {
              cand.insert(cand.begin() + static_cast<std::ptrdiff_t>(pos), block.rbegin(), block.rend());
            }
            const double v = score(cand);
            if (v < cur - eps) {
              order = std::move(cand);
              cur = v;
              improved = true;
            }
          }
        }
      }
    }
  }
  GtspTour t;
  t.order = order;
  t.sectors = detail::best_sectors_cyclic(g, order).second;
  return detail::canonical_tour(g, t);
}

/// \brief Relaxed tour in the requested mode.
inline TourLowerBound solve_tour_lb(const GtspInstance & g, TourMode mode)
{
  const GtspTour t = mode == TourMode::Exact ? solve_gtsp_exact(g) : solve_gtsp_heuristic(g);
  TourLowerBound lb;
  lb.mode = mode;
  lb.certified = mode == TourMode::Exact;
  lb.value = t.value;
  lb.sectors = t.sectors;
  const std::size_t n = t.order.size();
  for (std::size_t a = 0; a < n; ++a) {
    lb.sequence.push_back(g.ids[t.order[a]]);
    const std::size_t b = (a + 1) % n;
    lb.legs.push_back(g.leg(t.order[a], t.sectors[a], t.order[b], t.sectors[b]));
  }
  return lb;
}

/// \brief Certified tour gap: 3 rho sum of all widths / k.
inline double theoretical_gap_tour(const Instance & inst, int k)
{
  if (k < 1) {
    throw InvalidArgument("theoretical_gap_tour: k must be at least 1");
  }
  std::vector<std::size_t> all(inst.size());
  std::iota(all.begin(), all.end(), 0);
  return 3.0 * inst.rho * width_sum(inst, all) / k;
}

/// \brief Tour planning outcome. `lower_bound` holds the relaxation value, which is a
/// certified bound only when `certified` is true.
struct TourResult
{
  PlanResult plan;
  TourMode mode{TourMode::Exact};
  bool certified{true};
};

/// \brief Closed feasible tour from the relaxed one. The heading at sequence[0] is fixed to
/// its departure and then its arrival option; the cheaper closure wins, ties to departure.
inline TourResult repair_tour(const Instance & inst, const TourLowerBound & lb, int k)
{
  const auto idx = sequence_indices(inst, lb.sequence);
  const std::size_t n = idx.size();
  if (lb.legs.size() != n) {
    throw InvalidArgument("repair_tour: lower bound does not match the instance");
  }
  std::vector<const Waypoint *> w;
  for (std::size_t i : idx) {
    w.push_back(&inst.waypoints[i]);
  }
  w.push_back(w.front());
  PlanResult best;
  bool have = false;
  for (const double h : {lb.legs.front().theta_dep, lb.legs.back().theta_arr}) {
    PlanResult r;
    auto [total, headings] = detail::repair_chain(w, lb.legs, h, h, inst.rho, &r.feasible_legs);
    if (!have || total < best.feasible_length) {
      headings.pop_back();
      r.feasible_length = total;
      r.chosen_headings = std::move(headings);
      best = std::move(r);
      have = true;
    }
  }
  best.sequence = lb.sequence;
  best.k = k;
  best.closed = true;
  best.lower_bound = lb.value;
  best.lb_sectors = lb.sectors;
  best.lb_legs = lb.legs;
  best.theoretical_gap = theoretical_gap_tour(inst, k);
  best.deviation_pct = detail::percent(best.feasible_length - best.lower_bound, best.lower_bound);
  best.theoretical_deviation_pct = detail::percent(best.theoretical_gap, best.lower_bound);
  TourResult out;
  out.plan = std::move(best);
  out.mode = lb.mode;
  out.certified = lb.certified;
  return out;
}

/// \brief Relaxed tour, feasible closed tour and certificate. In heuristic mode the
/// sandwich holds against the relaxation value, which is not a lower bound.
inline TourResult plan_tour(
  const Instance & inst, int k, TourMode mode, unsigned jobs = 1, const IntervalOptions & opts = {})
{
  validate_instance(inst);
  if (mode == TourMode::Exact && inst.size() * static_cast<std::size_t>(std::max(k, 1)) > kExactNodeLimit) {
    throw SizeLimitExceeded(
      "exact tour mode supports n*k <= " + std::to_string(kExactNodeLimit));
  }
  const GtspInstance g = build_gtsp(inst, k, jobs, opts);
  TourResult r = repair_tour(inst, solve_tour_lb(g, mode), k);
  detail::audit_plan(inst, r.plan);
  return r;
}

}  // namespace rsfov

#endif  // RSFOV__TOUR_PLANNER_HPP_
