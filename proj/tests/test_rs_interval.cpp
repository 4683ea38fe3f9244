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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "rsfov/rs_interval.hpp"

namespace
{

using rsfov::AngleInterval;
using rsfov::EndpointCase;
using rsfov::IntervalQuery;
using rsfov::kHalfPi;
using rsfov::kPi;
using rsfov::kTwoPi;
using rsfov::Point2;
using rsfov::Pose;

constexpr double kRho = 100.0;

double slack(double v) {return 1e-9 * std::max(1.0, v);}

IntervalQuery random_query(std::mt19937_64 & rng, double fov)
{
  std::uniform_real_distribution<double> pos(0.0, 1000.0);
  std::uniform_real_distribution<double> lo(0.0, 1.5 * kPi);
  IntervalQuery q;
  q.p1 = {pos(rng), pos(rng)};
  const double a = lo(rng);
  q.i1 = AngleInterval(a, a + fov);
  q.p2 = {pos(rng), pos(rng)};
  const double b = lo(rng);
  q.i2 = AngleInterval(b, b + fov);
  q.rho = kRho;
  return q;
}

void expect_valid_solution(const IntervalQuery & q, const rsfov::IntervalSolution & s)
{
  EXPECT_TRUE(rsfov::contains(q.i1, s.theta_dep, 1e-12));
  EXPECT_TRUE(rsfov::contains(q.i2, s.theta_arr, 1e-12));
  EXPECT_GE(s.theta_dep, q.i1.theta_min() - 1e-12);
  EXPECT_LE(s.theta_dep, q.i1.theta_max() + 1e-12);
  EXPECT_NEAR(s.length, s.path.length, slack(s.length));
  const Pose end = rsfov::path_endpoint(s.path, Pose(q.p1.x, q.p1.y, s.theta_dep));
  EXPECT_LT(rsfov::position_error(end, Pose(q.p2.x, q.p2.y, s.theta_arr)), 1e-6 * q.rho);
  EXPECT_LT(rsfov::heading_error(end, Pose(q.p2.x, q.p2.y, s.theta_arr)), 1e-6);
}

TEST(SolveInterval, UnconstrainedStraightLine)
{
  IntervalQuery q{{0, 0}, AngleInterval(-1.0, 1.0), {10 * kRho, 0}, AngleInterval(-1.0, 1.0), kRho};
  const auto s = rsfov::solve_interval(q);
  EXPECT_NEAR(s.length, 10 * kRho, 1e-9);
  EXPECT_EQ(rsfov::word_string(s.path), "S+");
  EXPECT_NEAR(s.theta_dep, 0.0, 1e-9);
  EXPECT_NEAR(s.theta_arr, 0.0, 1e-9);
  EXPECT_EQ(s.case_tag, EndpointCase::InteriorInterior);

  q.i1 = AngleInterval(0.0, kTwoPi);
  q.i2 = AngleInterval(0.0, kTwoPi);
  // S+ at heading 0 (a window end) ties with S- at heading pi (interior).
  const auto t = rsfov::solve_interval(q);
  EXPECT_NEAR(t.length, 10 * kRho, 1e-9);
  EXPECT_EQ(t.path.segments.size(), 1u);
  EXPECT_EQ(t.path.segments[0].steer, rsfov::Steer::Straight);
  const auto g = rsfov::grid_oracle(q, 181);
  EXPECT_NEAR(g.length, 10 * kRho, rsfov::grid_error_bound(q, 181));
}

TEST(SolveInterval, DegenerateWindowsReduceToPointToPoint)
{
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    IntervalQuery q = random_query(rng, 0.0);
    const double p2p = rsfov::shortest_length(
      Pose(q.p1.x, q.p1.y, q.i1.theta_min()), Pose(q.p2.x, q.p2.y, q.i2.theta_min()), q.rho);
    const auto s = rsfov::solve_interval(q);
    EXPECT_NEAR(s.length, p2p, slack(p2p));
    EXPECT_NEAR(rsfov::grid_oracle(q, 2).length, p2p, slack(p2p));
    const auto c = rsfov::corner_lengths(q);
    for (double v : c) {
      EXPECT_EQ(v, c[0]);
    }
  }
}

TEST(SolveInterval, SymmetricWindowExample)
{
  const IntervalQuery q{
    {0, 0}, AngleInterval(kPi / 4, 3 * kPi / 4), {300, 0}, AngleInterval(kPi / 4, 3 * kPi / 4), kRho};
  const auto s = rsfov::solve_interval(q);
  expect_valid_solution(q, s);
  // Frozen value; grid_oracle(q, 721) agrees to 1e-13.
  EXPECT_NEAR(s.length, 328.44460378723306, 1e-9);
  const auto g = rsfov::grid_oracle(q, 721);
  EXPECT_LE(s.length, g.length + slack(g.length));
  EXPECT_LE(g.length - s.length, rsfov::grid_error_bound(q, 721));

  IntervalQuery wide = q;
  wide.i1 = AngleInterval(0.0, kPi);
  EXPECT_LE(rsfov::solve_interval(wide).length, s.length + slack(s.length));
}

TEST(CornerLengths, AlignedStraightCorners)
{
  const IntervalQuery q{{0, 0}, AngleInterval::fixed(0.0), {250, 0}, AngleInterval::fixed(0.0), kRho};
  for (double v : rsfov::corner_lengths(q)) {
    EXPECT_NEAR(v, 250.0, 1e-9);
  }
}

TEST(CaseCandidates, InteriorStraightOnCollinearPoints)
{
  const IntervalQuery q{{0, 0}, AngleInterval(-1.0, 1.0), {400, 0}, AngleInterval(-1.0, 1.0), kRho};
  bool found = false;
  for (const auto & s : rsfov::case_candidates(q, EndpointCase::InteriorInterior)) {
    found = found || (rsfov::word_string(s.path) == "S+" && std::abs(s.length - 400.0) < 1e-9);
  }
  EXPECT_TRUE(found);
}

TEST(CaseCandidates, CoincidentPointsWithSharedInterior)
{
  const IntervalQuery q{{5, 5}, AngleInterval(0.0, 1.0), {5, 5}, AngleInterval(0.5, 2.0), kRho};
  double best = std::numeric_limits<double>::infinity();
  for (const auto & s : rsfov::case_candidates(q, EndpointCase::InteriorInterior)) {
    best = std::min(best, s.length);
  }
  EXPECT_NEAR(best, 0.0, 1e-9);
  EXPECT_NEAR(rsfov::solve_interval(q).length, 0.0, 1e-9);
}

TEST(CaseCandidates, CornerCaseReproducesPointToPointWords)
{
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 10; ++i) {
    const IntervalQuery q = random_query(rng, kHalfPi);
    const auto p = rsfov::solve_p2p(
      Pose(q.p1.x, q.p1.y, q.i1.theta_max()), Pose(q.p2.x, q.p2.y, q.i2.theta_min()), q.rho);
    const std::string w = rsfov::word_string(p);
    if (w != "L+S+L+") {
      continue;
    }
    ++checked;
    double best = std::numeric_limits<double>::infinity();
    for (const auto & s : rsfov::case_candidates(q, EndpointCase::MaxMin)) {
      expect_valid_solution(q, s);
      best = std::min(best, s.length);
    }
    EXPECT_NEAR(best, p.length, slack(p.length));
  }
  EXPECT_GT(checked, 0);
}

TEST(SolveInterval, PropertiesOnRandomQueries)
{
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> fov(0.0, 1.2 * kPi);
  for (int i = 0; i < 40; ++i) {
    const IntervalQuery q = random_query(rng, i % 2 ? kHalfPi : fov(rng));
    const auto s = rsfov::solve_interval(q);
    expect_valid_solution(q, s);
    const double dist = std::hypot(q.p2.x - q.p1.x, q.p2.y - q.p1.y);
    EXPECT_GE(s.length, dist - slack(dist));
    for (double c : rsfov::corner_lengths(q)) {
      EXPECT_LE(s.length, c + slack(c));
    }
    const auto g = rsfov::grid_oracle(q, 121);
    EXPECT_LE(s.length, g.length + slack(g.length));
    EXPECT_LE(g.length - s.length, rsfov::grid_error_bound(q, 121));

    IntervalQuery sw{q.p2, q.i2, q.p1, q.i1, q.rho};
    EXPECT_NEAR(rsfov::solve_interval(sw).length, s.length, slack(s.length));

    IntervalQuery narrow = q;
    narrow.i1 = AngleInterval(q.i1.at(0.25), q.i1.at(0.75));
    narrow.i2 = AngleInterval(q.i2.at(0.1), q.i2.at(0.6));
    const double n = rsfov::solve_interval(narrow).length;
    EXPECT_LE(s.length, n + slack(n));
  }
}

TEST(SolveInterval, RobustnessNetCanBeDisabled)
{
  std::mt19937_64 rng(53);
  rsfov::IntervalOptions off;
  off.refine_samples = 0;
  for (int i = 0; i < 20; ++i) {
    const IntervalQuery q = random_query(rng, kHalfPi);
    const auto a = rsfov::solve_interval(q);
    const auto b = rsfov::solve_interval(q, off);
    expect_valid_solution(q, b);
    EXPECT_LE(a.length, b.length + slack(b.length));
    EXPECT_FALSE(b.refined_by_grid);
  }
}

TEST(GridOracle, ErrorBoundShrinks)
{
  const IntervalQuery q{{0, 0}, AngleInterval(0, kHalfPi), {300, 100}, AngleInterval(1, 2), kRho};
  EXPECT_GT(rsfov::grid_error_bound(q, 11), rsfov::grid_error_bound(q, 101));
  EXPECT_THROW(rsfov::grid_oracle(q, 1), rsfov::InvalidArgument);
  EXPECT_LE(rsfov::grid_oracle(q, 101).length, rsfov::grid_oracle(q, 2).length);
}

}  // namespace
