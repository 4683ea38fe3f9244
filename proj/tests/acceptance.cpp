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

/// \file
/// \brief Acceptance driver: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "rsfov/rsfov.hpp"

namespace
{

using rsfov::AngleInterval;
using rsfov::Instance;
using rsfov::IntervalQuery;
using rsfov::kHalfPi;
using rsfov::kPi;
using rsfov::kTwoPi;
using rsfov::Pose;
using rsfov::test::slack;

/// \brief Outcome of one criterion.
struct Outcome
{
  bool pass{true};
  std::string summary;
  std::string csv;
  std::vector<std::string> failures;

  void check(bool ok, const std::string & what)
  {
    if (!ok) {
      pass = false;
      if (failures.size() < 10) {
        failures.push_back(what);
      }
    }
  }
};

struct Options
{
  int c8_seeds{5};
};

std::string g17(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string f4(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

Pose random_pose(std::mt19937_64 & rng, double side)
{
  const double x = rsfov::unit_uniform(rng) * side;
  const double y = rsfov::unit_uniform(rng) * side;
  return Pose(x, y, rsfov::unit_uniform(rng) * kTwoPi);
}

// Point-to-point metric properties and lattice agreement on 200 pairs.
Outcome criterion_1(const Options &)
{
  Outcome o;
  const double rho = 100.0;
  std::mt19937_64 rng(1001);
  double worst = 0.0;
  o.csv = "pair,length,lattice,rel_err\n";
  for (int i = 0; i < 200; ++i) {
    const Pose a = random_pose(rng, 10.0 * rho);
    const Pose b = random_pose(rng, 10.0 * rho);
    const Pose c = random_pose(rng, 10.0 * rho);
    const double ab = rsfov::shortest_length(a, b, rho);
    const std::string tag = "pair " + std::to_string(i) + ": ";
    o.check(rsfov::shortest_length(a, a, rho) == 0.0, tag + "identity");
    const double d = std::hypot(a.x - b.x, a.y - b.y);
    o.check(ab >= d - slack(d), tag + "metric lower bound");
    o.check(std::abs(ab - rsfov::shortest_length(b, a, rho)) <= slack(ab), tag + "symmetry");

    const double phi = kTwoPi * rsfov::unit_uniform(rng);
    const double tx = 2000.0 * rsfov::unit_uniform(rng) - 1000.0;
    const double ty = 2000.0 * rsfov::unit_uniform(rng) - 1000.0;
    auto move = [&](const Pose & p) {
        return Pose(std::cos(phi) * p.x - std::sin(phi) * p.y + tx,
          std::sin(phi) * p.x + std::cos(phi) * p.y + ty, p.theta + phi);
      };
    o.check(std::abs(rsfov::shortest_length(move(a), move(b), rho) - ab) <= slack(ab), tag + "rigid invariance");

    const double s = 0.25 + 4.0 * rsfov::unit_uniform(rng);
    const double scaled = rsfov::shortest_length(
      Pose(s * a.x, s * a.y, a.theta), Pose(s * b.x, s * b.y, b.theta), s * rho);
    o.check(std::abs(scaled - s * ab) <= 1e-9 * s * ab, tag + "scale covariance");

    const double ac = rsfov::shortest_length(a, c, rho);
    const double bc = rsfov::shortest_length(b, c, rho);
    o.check(ac <= ab + bc + slack(ac), tag + "triangle inequality");

    const double lat = rsfov::lattice_oracle(a, b, rho);
    const double err = std::abs(lat - ab) / ab;
    worst = std::max(worst, err);
    o.check(err <= 0.02, tag + "lattice disagreement " + f4(100.0 * err) + "%");
    o.csv += std::to_string(i) + "," + g17(ab) + "," + g17(lat) + "," + g17(err) + "\n";
  }
  o.summary = "200 pairs, worst lattice deviation " + f4(100.0 * worst) + "% (limit 2%)";
  return o;
}

// Reconfiguration bound on 50 heading changes.
Outcome criterion_2(const Options &)
{
  Outcome o;
  const double rho = 100.0;
  double tightest = std::numeric_limits<double>::infinity();
  o.csv = "dtheta,length,bound,linear\n";
  for (int i = 0; i < 50; ++i) {
    const double dth = kPi * i / 49.0;
    const double len = rsfov::shortest_length(Pose(0, 0, dth), Pose(0, 0, 0), rho);
    const double bound = 2.0 * rho * dth + 2.0 * rho * std::sin(0.5 * dth);
    const double linear = 3.0 * rho * dth;
    o.check(len <= bound + 1e-9, "dtheta " + g17(dth) + ": length above the bound");
    o.check(bound <= linear + 1e-9, "dtheta " + g17(dth) + ": bound above 3 rho dtheta");
    o.check(std::abs(rsfov::reconfiguration_bound(dth, rho) - bound) <= 1e-9, "reconfiguration_bound value");
    if (dth > 0.0) {
      tightest = std::min(tightest, bound - len);
    }
    o.csv += g17(dth) + "," + g17(len) + "," + g17(bound) + "," + g17(linear) + "\n";
  }
  o.summary = "50 values in [0, pi], smallest margin " + f4(tightest);
  return o;
}

IntervalQuery protocol_query(std::mt19937_64 & rng)
{
  IntervalQuery q;
  q.rho = 100.0;
  q.p1 = {rsfov::unit_uniform(rng) * 1000.0, rsfov::unit_uniform(rng) * 1000.0};
  const double a = rsfov::unit_uniform(rng) * 1.5 * kPi;
  q.i1 = AngleInterval(a, a + kHalfPi);
  q.p2 = {rsfov::unit_uniform(rng) * 1000.0, rsfov::unit_uniform(rng) * 1000.0};
  const double b = rsfov::unit_uniform(rng) * 1.5 * kPi;
  q.i2 = AngleInterval(b, b + kHalfPi);
  return q;
}

// Interval solver against the 721 x 721 heading grid.
Outcome criterion_3(const Options &)
{
  Outcome o;
  std::mt19937_64 rng(3003);
  double worst_gap = 0.0;
  o.csv = "query,length,grid,bound\n";
  for (int i = 0; i < 100; ++i) {
    const IntervalQuery q = protocol_query(rng);
    const std::string tag = "query " + std::to_string(i) + ": ";
    const auto s = rsfov::solve_interval(q);
    const auto g = rsfov::grid_oracle(q, 721);
    const double bound = rsfov::grid_error_bound(q, 721);
    o.check(s.length <= g.length + slack(g.length), tag + "above the grid oracle");
    o.check(g.length - s.length <= bound, tag + "grid gap above its bound");
    worst_gap = std::max(worst_gap, g.length - s.length);
    for (double c : rsfov::corner_lengths(q)) {
      o.check(s.length <= c + slack(c), tag + "corner domination");
    }
    o.check(rsfov::contains(q.i1, s.theta_dep, 1e-12) && rsfov::contains(q.i2, s.theta_arr, 1e-12),
      tag + "heading outside its window");
    const Pose end = rsfov::path_endpoint(s.path, Pose(q.p1.x, q.p1.y, s.theta_dep));
    o.check(rsfov::position_error(end, Pose(q.p2.x, q.p2.y, s.theta_arr)) <= 1e-6 * q.rho,
      tag + "path misses the goal");
    const double d = std::hypot(q.p2.x - q.p1.x, q.p2.y - q.p1.y);
    o.check(s.length >= d - slack(d), tag + "below the Euclidean distance");

    IntervalQuery narrow = q;
    const double u1 = rsfov::unit_uniform(rng), u2 = rsfov::unit_uniform(rng);
    narrow.i1 = AngleInterval(q.i1.at(std::min(u1, u2)), q.i1.at(std::max(u1, u2)));
    const double v1 = rsfov::unit_uniform(rng), v2 = rsfov::unit_uniform(rng);
    narrow.i2 = AngleInterval(q.i2.at(std::min(v1, v2)), q.i2.at(std::max(v1, v2)));
    const double ln = rsfov::solve_interval(narrow).length;
    o.check(s.length <= ln + slack(ln), tag + "containment monotonicity (narrower)");
    IntervalQuery wide = q;
    wide.i1 = AngleInterval(q.i1.theta_min() - 0.3, q.i1.theta_max() + 0.2);
    wide.i2 = AngleInterval(q.i2.theta_min() - 0.1, q.i2.theta_max() + 0.4);
    o.check(rsfov::solve_interval(wide).length <= s.length + slack(s.length),
      tag + "containment monotonicity (wider)");
    const IntervalQuery sw{q.p2, q.i2, q.p1, q.i1, q.rho};
    o.check(std::abs(rsfov::solve_interval(sw).length - s.length) <= slack(s.length), tag + "swap symmetry");
    o.csv += std::to_string(i) + "," + g17(s.length) + "," + g17(g.length) + "," + g17(bound) + "\n";
  }
  o.summary = "100 queries, largest grid excess " + f4(worst_gap) + " (within the per-query bound)";
  return o;
}

// Lower-bound validity against the dense-grid optimum, n = 4.
Outcome criterion_4(const Options &)
{
  Outcome o;
  o.csv = "seed,grid_opt,grid_err,k,lb,ub\n";
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = rsfov::test::protocol_instance(4, seed);
    const auto seq = rsfov::euclidean_tsp_sequence(inst);
    const auto opt = rsfov::test::chain_oracle(inst, seq, 721);
    for (int k : {1, 2, 4}) {
      const auto r = rsfov::plan_sequence(inst, seq, k);
      const std::string tag = "seed " + std::to_string(seed) + " k " + std::to_string(k) + ": ";
      o.check(r.lower_bound <= opt.value + opt.error_bound, tag + "lower bound above the optimum");
      o.check(r.feasible_length >= opt.value - opt.error_bound, tag + "feasible length below the optimum");
      min_margin = std::min(min_margin, opt.value - r.lower_bound);
      o.csv += std::to_string(seed) + "," + g17(opt.value) + "," + g17(opt.error_bound) + "," +
        std::to_string(k) + "," + g17(r.lower_bound) + "," + g17(r.feasible_length) + "\n";
    }
  }
  o.summary = "20 instances x k in {1,2,4}, smallest (grid optimum - LB) " + f4(min_margin);
  return o;
}

std::vector<std::pair<std::string, Instance>> protocol_suite(int count, int n)
{
  std::vector<std::pair<std::string, Instance>> out;
  for (int s = 1; s <= count; ++s) {
    char name[32];
    std::snprintf(name, sizeof(name), "instance_%03d", s);
    out.emplace_back(name, rsfov::test::protocol_instance(n, static_cast<std::uint64_t>(s)));
  }
  return out;
}

// Certified sandwich on the 25-instance suite.
Outcome criterion_5(const Options &)
{
  Outcome o;
  const auto suite = protocol_suite(25, 20);
  rsfov::BenchmarkConfig cfg;
  cfg.ks = {4, 8, 16};
  cfg.jobs = 0;
  const auto table = rsfov::run_benchmark(suite, cfg);
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto & inst = suite[i].second;
    const auto seq = rsfov::euclidean_tsp_sequence(inst);
    const auto & cells = table.rows[i].cells;
    for (std::size_t c = 0; c < cfg.ks.size(); ++c) {
      const double gap = 3.0 * inst.rho * 18.0 * kHalfPi / cfg.ks[c];
      const std::string tag = suite[i].first + " k " + std::to_string(cfg.ks[c]) + ": ";
      o.check(std::abs(rsfov::theoretical_gap_seq(inst, seq, cfg.ks[c]) - gap) <= 1e-9, tag + "gap formula");
      o.check(cells[c].lower_bound <= cells[c].upper_bound, tag + "LB above UB");
      o.check(cells[c].upper_bound <= cells[c].lower_bound + gap, tag + "UB above LB + gap");
      min_slack = std::min(min_slack, cells[c].lower_bound + gap - cells[c].upper_bound);
      if (c > 0) {
        o.check(cells[c].lower_bound >= cells[c - 1].lower_bound - slack(cells[c].lower_bound),
          tag + "LB decreased under refinement");
      }
    }
  }
  o.csv = rsfov::benchmark_csv(table);
  o.summary = "25 instances x k in {4,8,16}, smallest certificate slack " + f4(min_slack);
  return o;
}

// Deviation statistics at k = 16.
Outcome criterion_6(const Options &)
{
  Outcome o;
  const auto suite = protocol_suite(25, 20);
  rsfov::BenchmarkConfig cfg;
  cfg.ks = {16};
  cfg.jobs = 0;
  const auto table = rsfov::run_benchmark(suite, cfg);
  double dev = 0.0, theo = 0.0, lo = 1e300, hi = 0.0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto & c = table.rows[i].cells[0];
    const double want = 100.0 * 3.0 * suite[i].second.rho * 18.0 * kHalfPi / 16.0 / c.lower_bound;
    o.check(std::abs(c.theoretical_deviation_pct - want) <= 1e-9 * want, suite[i].first + ": theoretical deviation formula");
    dev += c.deviation_pct;
    theo += c.theoretical_deviation_pct;
    lo = std::min(lo, c.theoretical_deviation_pct);
    hi = std::max(hi, c.theoretical_deviation_pct);
  }
  dev /= static_cast<double>(suite.size());
  theo /= static_cast<double>(suite.size());
  o.check(dev <= 3.0, "mean deviation " + f4(dev) + "% above 3%");
  o.check(theo >= 10.0 && theo <= 15.0, "mean theoretical deviation " + f4(theo) + "% outside 10-15%");
  o.csv = rsfov::benchmark_csv(table);
  o.summary = "mean deviation " + f4(dev) + "% (limit 3%), mean theoretical deviation " + f4(theo) +
    "% (range " + f4(lo) + "-" + f4(hi) + "), ratio " + f4(theo / std::max(dev, 1e-12));
  return o;
}

std::string tour_exact_rows(int count, Outcome * o)
{
  std::string csv = "seed,exact,exhaustive,ub,gap\n";
  for (int seed = 1; seed <= count; ++seed) {
    const Instance inst = rsfov::test::protocol_instance(4, static_cast<std::uint64_t>(seed));
    const auto g = rsfov::build_gtsp(inst, 2);
    const double brute = rsfov::test::exhaustive_gtsp(g);
    const auto lb = rsfov::solve_tour_lb(g, rsfov::TourMode::Exact);
    const auto r = rsfov::repair_tour(inst, lb, 2);
    rsfov::detail::audit_plan(inst, r.plan);
    const double gap = rsfov::theoretical_gap_tour(inst, 2);
    if (o) {
      const std::string tag = "seed " + std::to_string(seed) + ": ";
      o->check(std::abs(lb.value - brute) <= 1e-9, tag + "exact differs from enumeration");
      o->check(r.certified, tag + "exact result not certified");
      o->check(r.plan.lower_bound <= r.plan.feasible_length, tag + "LB above UB");
      o->check(r.plan.feasible_length <= r.plan.lower_bound + gap, tag + "UB above LB + gap");
    }
    csv += std::to_string(seed) + "," + g17(lb.value) + "," + g17(brute) + "," +
      g17(r.plan.feasible_length) + "," + g17(gap) + "\n";
  }
  return csv;
}

// Exact tour mode against enumeration, n = 4, k = 2.
Outcome criterion_7(const Options &)
{
  Outcome o;
  o.csv = tour_exact_rows(20, &o);
  o.summary = "20 instances, exact one-in-a-set tour equals enumeration and meets its certificate";
  return o;
}

// Heuristic tour mode at full scale.
Outcome criterion_8(const Options & opt)
{
  Outcome o;
  const auto suite = protocol_suite(opt.c8_seeds, 20);
  rsfov::BenchmarkConfig cfg;
  cfg.variant = rsfov::Variant::Tour;
  cfg.mode = rsfov::TourMode::Heuristic;
  cfg.ks = {16};
  cfg.jobs = 0;
  const auto table = rsfov::run_benchmark(suite, cfg);
  o.check(!table.certified, "heuristic table marked certified");
  o.csv = rsfov::benchmark_csv(table);
  o.check(o.csv.find("relax_k16") != std::string::npos && o.csv.find("lb_k16") == std::string::npos,
    "CSV header does not label the relaxation value");
  o.check(rsfov::benchmark_text(table).find("not a lower bound") != std::string::npos,
    "text table does not label the relaxation value");
  double dev = 0.0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto & c = table.rows[i].cells[0];
    o.check(c.upper_bound >= c.lower_bound, suite[i].first + ": UB below the relaxation value");
    dev += c.deviation_pct;
  }
  dev /= static_cast<double>(suite.size());
  o.check(dev <= 4.0, "mean deviation vs relaxation " + f4(dev) + "% above 4%");
  o.summary = std::to_string(suite.size()) + " instances (n=20, k=16), mean deviation vs heuristic relaxation " +
    f4(dev) + "% (limit 4%), relaxation not certified";
  return o;
}

// Byte-identical CSVs on reruns, independent of the worker count.
Outcome criterion_9(const Options &)
{
  Outcome o;
  const Options opt;
  const std::string c2a = criterion_2(opt).csv;
  const std::string c2b = criterion_2(opt).csv;
  o.check(c2a == c2b, "criterion 2 CSV differs between runs");
  o.check(tour_exact_rows(5, nullptr) == tour_exact_rows(5, nullptr), "criterion 7 CSV differs between runs");

  const auto seq_suite = protocol_suite(3, 20);
  rsfov::BenchmarkConfig cfg;
  cfg.ks = {4};
  cfg.jobs = 1;
  const std::string s1 = rsfov::benchmark_csv(rsfov::run_benchmark(seq_suite, cfg));
  cfg.jobs = 3;
  const std::string s2 = rsfov::benchmark_csv(rsfov::run_benchmark(seq_suite, cfg));
  o.check(s1 == s2, "sequenced benchmark CSV depends on the worker count");

  const auto tour_suite = protocol_suite(2, 8);
  cfg.variant = rsfov::Variant::Tour;
  cfg.mode = rsfov::TourMode::Heuristic;
  cfg.ks = {2};
  cfg.jobs = 1;
  const std::string t1 = rsfov::benchmark_csv(rsfov::run_benchmark(tour_suite, cfg));
  cfg.jobs = 2;
  const std::string t2 = rsfov::benchmark_csv(rsfov::run_benchmark(tour_suite, cfg));
  o.check(t1 == t2, "tour benchmark CSV depends on the worker count");

  std::ostringstream ss;
  ss << "check,bytes\ncriterion_2," << c2a.size() << "\nseq_bench," << s1.size() << "\ntour_bench," <<
    t1.size() << "\n";
  o.csv = ss.str();
  o.summary = "reruns of 4 CSV producers are byte-identical across runs and worker counts";
  return o;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  std::string csv_dir;
  Options opt;
  app.add_option("--only", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  app.add_option("--csv-dir", csv_dir, "Write each criterion's CSV to this directory");
  app.add_option("--c8-seeds", opt.c8_seeds, "Instances used by criterion 8 (seeds 1..N)")
  ->check(CLI::Range(1, 25));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome(const Options &)>> criteria{
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9};
  bool all = true;
  for (int c = 1; c <= 9; ++c) {
    if (only != 0 && c != only) {
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(c - 1)](opt);
    } catch (const std::exception & e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.summary << " (" <<
      f4(secs) << " s)\n";
    for (const auto & f : o.failures) {
      std::cout << "  " << f << "\n";
    }
    std::cout.flush();
    if (!csv_dir.empty()) {
      std::ofstream(csv_dir + "/criterion_" + std::to_string(c) + ".csv", std::ios::binary) << o.csv;
    }
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
