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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "rsfov/tour_planner.hpp"

namespace
{

using rsfov::AngleInterval;
using rsfov::Instance;
using rsfov::kHalfPi;
using rsfov::TourMode;
using rsfov::Waypoint;
using rsfov::test::slack;

TEST(BuildGtsp, CountsAndSymmetry)
{
  const Instance inst = rsfov::test::protocol_instance(3, 1);
  for (int k : {1, 2}) {
    const auto g = rsfov::build_gtsp(inst, k);
    EXPECT_EQ(g.nodes(), 3u * k);
    std::size_t directed = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) {
          continue;
        }
        const double d = std::hypot(
          inst.waypoints[i].x - inst.waypoints[j].x, inst.waypoints[i].y - inst.waypoints[j].y);
        for (int m = 0; m < k; ++m) {
          for (int l = 0; l < k; ++l) {
            ++directed;
            EXPECT_NEAR(g.cost(i, m, j, l), g.cost(j, l, i, m), 1e-9);
            EXPECT_GE(g.cost(i, m, j, l), d - slack(d));
          }
        }
      }
    }
    EXPECT_EQ(directed, k == 1 ? 6u : 24u);
  }
  EXPECT_THROW(rsfov::build_gtsp(rsfov::test::protocol_instance(2, 1), 1), rsfov::InvalidArgument);
  EXPECT_THROW(rsfov::build_gtsp(inst, 0), rsfov::InvalidArgument);
}

TEST(BuildGtsp, ReversedLegsStayFeasible)
{
  const Instance inst = rsfov::test::protocol_instance(3, 2);
  const auto g = rsfov::build_gtsp(inst, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) {
        continue;
      }
      const auto & a = inst.waypoints[i];
      const auto & b = inst.waypoints[j];
      for (int m = 0; m < 2; ++m) {
        for (int l = 0; l < 2; ++l) {
          const auto & s = g.leg(i, m, j, l);
          EXPECT_TRUE(rsfov::contains(g.sectors[i][m], s.theta_dep, 1e-12));
          EXPECT_TRUE(rsfov::contains(g.sectors[j][l], s.theta_arr, 1e-12));
          const rsfov::Pose end = rsfov::path_endpoint(s.path, rsfov::Pose(a.x, a.y, s.theta_dep));
          EXPECT_LT(rsfov::position_error(end, rsfov::Pose(b.x, b.y, s.theta_arr)), 1e-6 * inst.rho);
        }
      }
    }
  }
}

TEST(NoonBean, SingletonSetsAreOrdinaryAtsp)
{
  const Instance inst = rsfov::test::protocol_instance(3, 4);
  const auto g = rsfov::build_gtsp(inst, 1);
  const auto a = rsfov::noon_bean_transform(g);
  ASSERT_EQ(a.cost.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(std::isinf(a.cost[i][i]));
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) {
        EXPECT_EQ(a.cost[i][j], g.cost(i, 0, j, 0) + a.offset);
      }
    }
  }
  const double total = g.cost(0, 0, 1, 0) + g.cost(1, 0, 2, 0) + g.cost(2, 0, 0, 0);
  const auto lb = rsfov::solve_tour_lb(g, TourMode::Exact);
  EXPECT_NEAR(lb.value, total, slack(total));
}

TEST(NoonBean, ValueShiftAndRoundTrip)
{
  const Instance inst = rsfov::test::protocol_instance(4, 6);
  const auto g = rsfov::build_gtsp(inst, 2);
  const auto a = rsfov::noon_bean_transform(g);
  double sum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (int m = 0; m < 2 && i != j; ++m) {
        for (int l = 0; l < 2; ++l) {
          sum += g.cost(i, m, j, l);
        }
      }
    }
  }
  EXPECT_GT(a.offset, sum);
  const auto succ = rsfov::detail::solve_atsp_exact(a.cost);
  double atsp = 0.0;
  std::set<std::size_t> seen;
  for (std::size_t u = 0; u < succ.size(); ++u) {
    atsp += a.cost[u][succ[u]];
    seen.insert(succ[u]);
  }
  EXPECT_EQ(seen.size(), succ.size());
  const auto t = rsfov::decode_atsp_tour(g, succ);
  EXPECT_EQ(std::set<std::size_t>(t.order.begin(), t.order.end()).size(), 4u);
  const double brute = rsfov::test::exhaustive_gtsp(g);
  EXPECT_NEAR(atsp - 4.0 * a.offset, brute, 1e-9 * a.offset);
  EXPECT_NEAR(t.value, brute, slack(brute));
}

TEST(SolveTourLb, ExactMatchesEnumeration)
{
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 1}}) {
      const Instance inst = rsfov::test::protocol_instance(n, seed);
      const auto g = rsfov::build_gtsp(inst, k);
      const double brute = rsfov::test::exhaustive_gtsp(g);
      const auto exact = rsfov::solve_tour_lb(g, TourMode::Exact);
      EXPECT_NEAR(exact.value, brute, 1e-9) << "seed " << seed << " n " << n;
      EXPECT_TRUE(exact.certified);
      const auto heur = rsfov::solve_tour_lb(g, TourMode::Heuristic);
      EXPECT_GE(heur.value, exact.value - slack(exact.value));
      EXPECT_FALSE(heur.certified);
    }
  }
}

TEST(SolveTourLb, LegsMatchSelection)
{
  const Instance inst = rsfov::test::protocol_instance(5, 8);
  const auto g = rsfov::build_gtsp(inst, 2);
  const auto lb = rsfov::solve_tour_lb(g, TourMode::Exact);
  ASSERT_EQ(lb.sequence.size(), 5u);
  ASSERT_EQ(lb.legs.size(), 5u);
  double sum = 0.0;
  for (const auto & l : lb.legs) {
    sum += l.length;
  }
  EXPECT_NEAR(sum, lb.value, slack(sum));
  EXPECT_EQ(lb.sequence.front(), 1);
}

TEST(SolveTourLb, SizeLimit)
{
  const Instance inst = rsfov::test::protocol_instance(7, 3);
  const auto g = rsfov::build_gtsp(inst, 4);
  EXPECT_THROW(rsfov::solve_tour_lb(g, TourMode::Exact), rsfov::SizeLimitExceeded);
  EXPECT_THROW(rsfov::plan_tour(inst, 4, TourMode::Exact), rsfov::SizeLimitExceeded);
  EXPECT_NO_THROW(rsfov::solve_tour_lb(g, TourMode::Heuristic));
}

TEST(TheoreticalGap, Tour)
{
  Instance inst;
  inst.rho = 100.0;
  for (int i = 0; i < 20; ++i) {
    inst.waypoints.push_back(Waypoint{i + 1, 10.0 * i, 0.0, AngleInterval(0.1 * i, 0.1 * i + kHalfPi)});
  }
  const double gap = rsfov::theoretical_gap_tour(inst, 16);
  EXPECT_NEAR(gap, 3.0 * 100.0 * 20.0 * kHalfPi / 16.0, 1e-9);
  EXPECT_NEAR(gap, 589.05, 0.005);
  EXPECT_NEAR(rsfov::theoretical_gap_tour(inst, 32), 0.5 * gap, 1e-12);
  EXPECT_THROW(rsfov::theoretical_gap_tour(inst, 0), rsfov::InvalidArgument);
}

TEST(RepairTour, ConsistentRelaxation)
{
  // Collinear points: forward legs out, one reverse straight back, heading 0 throughout.
  Instance inst;
  inst.rho = 10.0;
  for (int i = 0; i < 3; ++i) {
    inst.waypoints.push_back(Waypoint{i + 1, 500.0 * i, 0.0, AngleInterval(-0.2, 0.2)});
  }
  const auto r = rsfov::plan_tour(inst, 1, TourMode::Exact);
  EXPECT_TRUE(r.plan.closed);
  EXPECT_NEAR(r.plan.lower_bound, 2000.0, 1e-6);
  EXPECT_NEAR(r.plan.feasible_length, r.plan.lower_bound, slack(r.plan.lower_bound));
}

TEST(PlanTour, CorollarySandwichAndFeasibility)
{
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Instance inst = rsfov::test::protocol_instance(4, seed);
    const auto r = rsfov::plan_tour(inst, 2, TourMode::Exact);
    const auto & p = r.plan;
    EXPECT_TRUE(r.certified);
    EXPECT_LE(p.lower_bound, p.feasible_length + slack(p.feasible_length));
    EXPECT_LE(p.feasible_length, p.lower_bound + rsfov::theoretical_gap_tour(inst, 2) + slack(p.feasible_length));
    const auto idx = rsfov::sequence_indices(inst, p.sequence);
    ASSERT_EQ(p.feasible_legs.size(), 4u);
    ASSERT_EQ(p.chosen_headings.size(), 4u);
    for (std::size_t t = 0; t < 4; ++t) {
      const Waypoint & a = inst.waypoints[idx[t]];
      const Waypoint & b = inst.waypoints[idx[(t + 1) % 4]];
      EXPECT_TRUE(rsfov::contains(a.fov, p.chosen_headings[t], 1e-9));
      const rsfov::Pose end = rsfov::path_endpoint(p.feasible_legs[t], rsfov::Pose(a.x, a.y, p.chosen_headings[t]));
      const rsfov::Pose want(b.x, b.y, p.chosen_headings[(t + 1) % 4]);
      EXPECT_LT(rsfov::position_error(end, want), 1e-6 * inst.rho);
      EXPECT_LT(rsfov::heading_error(end, want), 1e-6);
    }
  }
}

TEST(PlanTour, HeuristicModeIsLabelled)
{
  const Instance inst = rsfov::test::protocol_instance(8, 2);
  const auto r = rsfov::plan_tour(inst, 4, TourMode::Heuristic);
  EXPECT_FALSE(r.certified);
  EXPECT_EQ(r.mode, TourMode::Heuristic);
  EXPECT_GE(r.plan.feasible_length, r.plan.lower_bound - slack(r.plan.lower_bound));
  EXPECT_LE(r.plan.feasible_length, r.plan.lower_bound + r.plan.theoretical_gap + slack(r.plan.feasible_length));
}

TEST(PlanTour, ThreadCountDoesNotChangeResult)
{
  const Instance inst = rsfov::test::protocol_instance(6, 4);
  const auto a = rsfov::plan_tour(inst, 2, TourMode::Heuristic, 1);
  const auto b = rsfov::plan_tour(inst, 2, TourMode::Heuristic, 3);
  EXPECT_EQ(a.plan.sequence, b.plan.sequence);
  EXPECT_EQ(a.plan.lower_bound, b.plan.lower_bound);
  EXPECT_EQ(a.plan.feasible_length, b.plan.feasible_length);
}

}  // namespace
