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
#include <random>

#include "rsfov/lattice_oracle.hpp"
#include "rsfov/rs_point.hpp"

namespace
{

using rsfov::kHalfPi;
using rsfov::kPi;
using rsfov::kTwoPi;
using rsfov::LatticeResolution;
using rsfov::Pose;

TEST(LatticeOracle, StraightLine)
{
  LatticeResolution fine = LatticeResolution::defaults(1.0);
  fine.xy_step = 0.01;
  EXPECT_NEAR(rsfov::lattice_oracle(Pose(0, 0, 0), Pose(5, 0, 0), 1.0, fine), 5.0, 0.05);
}

TEST(LatticeOracle, AgreesWithSolverOnExamples)
{
  for (const auto & [a, b] : {std::pair{Pose(0, 0, kHalfPi), Pose(0, 0, 0)},
      std::pair{Pose(0, 0, 0), Pose(0.5, 0.5, kPi)}})
  {
    const double exact = rsfov::shortest_length(a, b, 1.0);
    const double lat = rsfov::lattice_oracle(a, b, 1.0);
    EXPECT_LE(std::abs(lat - exact), 0.02 * exact);
  }
}

TEST(LatticeOracle, ShortThreeArcManeuver)
{
  // Optimal word L-R+L- with arc angles off the heading lattice.
  const Pose a(0, 0, 0), b(-0.7318831642, 0.278839695, 4.887001164);
  const double exact = rsfov::shortest_length(a, b, 1.0);
  EXPECT_NEAR(exact, 1.396184, 1e-6);
  const double lat = rsfov::lattice_oracle(a, b, 1.0);
  EXPECT_LE(std::abs(lat - exact), 0.02 * exact);
  EXPECT_GE(lat, exact - 1e-9);
}

TEST(LatticeOracle, AgreesWithSolverOnRandomPairs)
{
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> pos(0.0, 1000.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int i = 0; i < 12; ++i) {
    const Pose a(pos(rng), pos(rng), ang(rng));
    const Pose b(pos(rng), pos(rng), ang(rng));
    const double exact = rsfov::shortest_length(a, b, 100.0);
    const double lat = rsfov::lattice_oracle(a, b, 100.0);
    EXPECT_LE(std::abs(lat - exact), 0.02 * exact) << i;
  }
}

TEST(LatticeOracle, ErrorShrinksWithResolution)
{
  const Pose a(0, 0, 0), b(2.3, 1.1, 2.0);
  const double exact = rsfov::shortest_length(a, b, 1.0);
  LatticeResolution coarse = LatticeResolution::defaults(1.0);
  coarse.xy_step = 0.1;
  coarse.theta_step = kTwoPi / 36.0;
  coarse.primitive_length = kPi / 18.0;
  const double e_coarse = std::abs(rsfov::lattice_oracle(a, b, 1.0, coarse) - exact);
  const double e_default = std::abs(rsfov::lattice_oracle(a, b, 1.0) - exact);
  EXPECT_LE(e_default, e_coarse + 1e-9);
  EXPECT_LE(e_default, 0.02 * exact);
}

TEST(LatticeOracle, ReportsExhaustedSearch)
{
  LatticeResolution r = LatticeResolution::defaults(1.0);
  r.max_expansions = 10;
  EXPECT_THROW(rsfov::lattice_oracle(Pose(0, 0, 0), Pose(3, 3, 1.0), 1.0, r), rsfov::SearchExhausted);
  LatticeResolution bad = LatticeResolution::defaults(1.0);
  bad.xy_step = 0.0;
  EXPECT_THROW(rsfov::lattice_oracle(Pose(), Pose(1, 0, 0), 1.0, bad), rsfov::InvalidArgument);
}

TEST(LatticeOracle, CountsExpansions)
{
  rsfov::LatticeStats stats;
  rsfov::lattice_oracle(Pose(0, 0, 0), Pose(1, 1, 1), 1.0, LatticeResolution::defaults(1.0), &stats);
  EXPECT_GT(stats.expansions, 0u);
}

}  // namespace
