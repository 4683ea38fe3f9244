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

#ifndef RSFOV__BENCH_HPP_
#define RSFOV__BENCH_HPP_

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rsfov/result_io.hpp"

namespace rsfov
{

enum class Variant { Sequenced, Tour };

/// \brief Bounds of one instance at one k.
struct BenchmarkCell
{
  double lower_bound{0.0};
  double upper_bound{0.0};
  double deviation_pct{0.0};
  double theoretical_deviation_pct{0.0};
};

/// \brief Wall time in seconds of each planning phase.
struct PhaseTimes
{
  double graph{0.0};
  double search{0.0};
  double repair{0.0};
};

/// \brief One instance across all requested k.
struct BenchmarkRow
{
  std::string instance;
  std::vector<BenchmarkCell> cells;  ///< one per k
  std::vector<PhaseTimes> times;  ///< one per k
};

struct BenchmarkConfig
{
  Variant variant{Variant::Sequenced};
  TourMode mode{TourMode::Exact};
  std::vector<int> ks{4, 8, 16};
  unsigned jobs{1};
  IntervalOptions interval;
};

struct BenchmarkTable
{
  BenchmarkConfig config;
  bool certified{true};
  std::vector<BenchmarkRow> rows;
};

namespace detail
{

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// \brief Throws InvariantViolation when a cell breaks the row invariants.
inline void check_cell(const BenchmarkCell & c, const std::string & where)
{
  const double slack = 1e-9 * std::max(1.0, c.lower_bound);
  if (!(c.upper_bound >= c.lower_bound - slack)) {
    throw InvariantViolation(where + ": upper bound below the lower bound");
  }
  if (!(c.theoretical_deviation_pct >= c.deviation_pct - 1e-9)) {
    throw InvariantViolation(where + ": deviation exceeds the theoretical deviation");
  }
}

}  // namespace detail

/// \brief Plan one instance at every k of the configuration, timing each phase.
inline BenchmarkRow bench_instance(
  const std::string & name, const Instance & inst, const BenchmarkConfig & cfg)
{
  BenchmarkRow row;
  row.instance = name;
  const std::vector<int> sequence =
    cfg.variant == Variant::Sequenced ? euclidean_tsp_sequence(inst) : std::vector<int>{};
  for (int k : cfg.ks) {
    PhaseTimes t;
    PlanResult r;
    if (cfg.variant == Variant::Sequenced) {
      auto t0 = std::chrono::steady_clock::now();
      const LayeredGraph g = build_layered_graph(inst, sequence, k, 1, cfg.interval);
      t.graph = detail::seconds_since(t0);
      t0 = std::chrono::steady_clock::now();
      const SequenceLowerBound lb = lower_bound_seq(g);
      t.search = detail::seconds_since(t0);
      t0 = std::chrono::steady_clock::now();
      r = repair_to_feasible(inst, sequence, lb, k);
      detail::audit_plan(inst, r);
      t.repair = detail::seconds_since(t0);
    } else {
      if (cfg.mode == TourMode::Exact &&
        inst.size() * static_cast<std::size_t>(k) > kExactNodeLimit)
      {
        throw SizeLimitExceeded(
          name + ": exact tour mode supports n*k <= " + std::to_string(kExactNodeLimit));
      }
      auto t0 = std::chrono::steady_clock::now();
      const GtspInstance g = build_gtsp(inst, k, 1, cfg.interval);
      t.graph = detail::seconds_since(t0);
      t0 = std::chrono::steady_clock::now();
      const TourLowerBound lb = solve_tour_lb(g, cfg.mode);
      t.search = detail::seconds_since(t0);
      t0 = std::chrono::steady_clock::now();
      r = repair_tour(inst, lb, k).plan;
      detail::audit_plan(inst, r);
      t.repair = detail::seconds_since(t0);
    }
    BenchmarkCell c{r.lower_bound, r.feasible_length, r.deviation_pct, r.theoretical_deviation_pct};
    detail::check_cell(c, name + " k=" + std::to_string(k));
    row.cells.push_back(c);
    row.times.push_back(t);
  }
  return row;
}

/// \brief Benchmark named instances; runs up to cfg.jobs instances at once and returns
/// rows in the order given. Refuses instances with differing rho.
inline BenchmarkTable run_benchmark(
  const std::vector<std::pair<std::string, Instance>> & instances, const BenchmarkConfig & cfg)
{
  if (instances.empty()) {
    throw InvalidArgument("bench: no instances");
  }
  if (cfg.ks.empty()) {
    throw InvalidArgument("bench: empty k list");
  }
  for (int k : cfg.ks) {
    if (k < 1) {
      throw InvalidArgument("bench: k must be at least 1");
    }
  }
  for (const auto & [name, inst] : instances) {
    if (inst.rho != instances.front().second.rho) {
      throw InvalidArgument(
        "bench: mixed rho across instances (" + instances.front().first + " vs " + name + ")");
    }
  }
  BenchmarkTable table;
  table.config = cfg;
  table.certified = cfg.variant == Variant::Sequenced || cfg.mode == TourMode::Exact;
  table.rows.resize(instances.size());
  parallel_for(instances.size(), resolve_jobs(cfg.jobs), [&](std::size_t i) {
      table.rows[i] = bench_instance(instances[i].first, instances[i].second, cfg);
    });
  return table;
}

/// \brief Column-wise means of the rows.
inline std::vector<BenchmarkCell> benchmark_means(const BenchmarkTable & t)
{
  std::vector<BenchmarkCell> m(t.config.ks.size());
  for (const auto & row : t.rows) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      m[c].lower_bound += row.cells[c].lower_bound;
      m[c].upper_bound += row.cells[c].upper_bound;
      m[c].deviation_pct += row.cells[c].deviation_pct;
      m[c].theoretical_deviation_pct += row.cells[c].theoretical_deviation_pct;
    }
  }
  const double n = static_cast<double>(t.rows.size());
  for (auto & c : m) {
    c.lower_bound /= n;
    c.upper_bound /= n;
    c.deviation_pct /= n;
    c.theoretical_deviation_pct /= n;
  }
  return m;
}

inline std::string variant_name(Variant v) {return v == Variant::Sequenced ? "seq" : "tour";}
inline std::string mode_name(TourMode m) {return m == TourMode::Exact ? "exact" : "heuristic";}

namespace detail
{

inline std::string fmt6(double v)
{
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

inline std::string fmt2(double v)
{
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace detail

/// \brief CSV with one row per instance and a final mean row. Contains no timings, so
/// reruns with the same inputs are byte-identical. In heuristic mode the bound columns
/// are named relax_* and dev_vs_relax_*.
inline std::string benchmark_csv(const BenchmarkTable & t)
{
  const auto & ks = t.config.ks;
  const std::string lb = t.certified ? "lb_k" : "relax_k";
  const std::string dev = t.certified ? "dev_pct_k" : "dev_vs_relax_pct_k";
  std::ostringstream o;
  o << "instance,variant,mode";
  for (const std::string & p : {lb, std::string("ub_k"), dev, std::string("theo_dev_pct_k")}) {
    for (int k : ks) {
      o << "," << p << k;
    }
  }
  o << "\n";
  const std::string mode = t.config.variant == Variant::Sequenced ? "exact" : mode_name(t.config.mode);
  auto line = [&](const std::string & name, const std::vector<BenchmarkCell> & cells) {
      o << name << "," << variant_name(t.config.variant) << "," << mode;
      for (const auto & c : cells) {
        o << "," << detail::fmt6(c.lower_bound);
      }
      for (const auto & c : cells) {
        o << "," << detail::fmt6(c.upper_bound);
      }
      for (const auto & c : cells) {
        o << "," << detail::fmt6(c.deviation_pct);
      }
      for (const auto & c : cells) {
        o << "," << detail::fmt6(c.theoretical_deviation_pct);
      }
      o << "\n";
    };
  for (const auto & row : t.rows) {
    line(row.instance, row.cells);
  }
  line("mean", benchmark_means(t));
  return o.str();
}

/// \brief Aligned text table in the layout lower bounds | upper bounds | %deviation |
/// %theoretical deviation, followed by the summed phase times per k.
inline std::string benchmark_text(const BenchmarkTable & t)
{
  const auto & ks = t.config.ks;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"instance"};
  const std::string lb = t.certified ? "LB" : "relax";
  const std::string dev = t.certified ? "%dev" : "%dev(relax)";
  for (const std::string & p : {lb, std::string("UB"), dev, std::string("%theo")}) {
    for (int k : ks) {
      head.push_back(p + " k=" + std::to_string(k));
    }
  }
  cells.push_back(head);
  auto add = [&](const std::string & name, const std::vector<BenchmarkCell> & cs) {
      std::vector<std::string> r{name};
      for (const auto & c : cs) {
        r.push_back(detail::fmt2(c.lower_bound));
      }
      for (const auto & c : cs) {
        r.push_back(detail::fmt2(c.upper_bound));
      }
      for (const auto & c : cs) {
        r.push_back(detail::fmt2(c.deviation_pct));
      }
      for (const auto & c : cs) {
        r.push_back(detail::fmt2(c.theoretical_deviation_pct));
      }
      cells.push_back(std::move(r));
    };
  for (const auto & row : t.rows) {
    add(row.instance, row.cells);
  }
  add("mean", benchmark_means(t));
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto & r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      width[c] = std::max(width[c], r[c].size());
    }
  }
  std::ostringstream o;
  o << "variant " << variant_name(t.config.variant);
  if (t.config.variant == Variant::Tour) {
    o << ", mode " << mode_name(t.config.mode);
  }
  o << ", bound: " << bound_label(t.certified) << "\n";
  for (const auto & r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c > 0) {
        o << "  ";
      }
      const std::string pad(width[c] - r[c].size(), ' ');
      o << (c == 0 ? r[c] + pad : pad + r[c]);
    }
    o << "\n";
  }
  o << "wall time per phase, summed over instances (s):\n";
  for (std::size_t c = 0; c < ks.size(); ++c) {
    PhaseTimes s;
    for (const auto & row : t.rows) {
      s.graph += row.times[c].graph;
      s.search += row.times[c].search;
      s.repair += row.times[c].repair;
    }
    o << "  k=" << ks[c] << ": interval costs " << detail::fmt2(s.graph) << ", bound search " <<
      detail::fmt2(s.search) << ", repair " << detail::fmt2(s.repair) << "\n";
  }
  return o.str();
}

}  // namespace rsfov

#endif  // RSFOV__BENCH_HPP_
