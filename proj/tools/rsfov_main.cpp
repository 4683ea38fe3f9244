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

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "rsfov/rsfov.hpp"

namespace fs = std::filesystem;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitInternal = 4;

struct GenerateArgs
{
  int n{20};
  std::string seed_range{"1..25"};
  std::string out;
  bool force{false};
  double area{1000.0};
  double rho{100.0};
  double fov_width{rsfov::kHalfPi};
  double theta_range{1.5 * rsfov::kPi};
};

struct PlanArgs
{
  std::string instance;
  std::string variant{"seq"};
  int k{16};
  std::string mode{"exact"};
  std::string sequence{"tsp"};
  bool certified{false};
  std::string out;
  std::string svg;
  unsigned jobs{0};
};

struct BenchArgs
{
  std::string dir;
  std::string variant{"seq"};
  std::vector<int> ks{4, 8, 16};
  std::string mode{"exact"};
  std::string csv;
  std::string out;
  unsigned jobs{0};
};

struct RenderArgs
{
  std::string instance;
  std::string result;
  std::string svg;
};

/// \brief Parse "A..B" or "A" into an inclusive seed range.
std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string & s)
{
  const auto dots = s.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto v = std::stoull(s, &used);
      if (used != s.size()) {
        throw std::invalid_argument(s);
      }
      return {v, v};
    }
    const std::string a = s.substr(0, dots);
    const std::string b = s.substr(dots + 2);
    std::size_t ua = 0, ub = 0;
    const auto lo = std::stoull(a, &ua);
    const auto hi = std::stoull(b, &ub);
    if (ua != a.size() || ub != b.size() || hi < lo) {
      throw std::invalid_argument(s);
    }
    return {lo, hi};
  } catch (const std::logic_error &) {
    throw rsfov::InvalidArgument("--seed-range: expected A..B with A <= B, got '" + s + "'");
  }
}

void write_text(const std::string & file, const std::string & text)
{
  if (file.empty() || file == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    rsfov::detail::write_file(file, text);
  }
}

int run_generate(const GenerateArgs & a)
{
  const auto [lo, hi] = parse_seed_range(a.seed_range);
  const fs::path dir(a.out);
  if (fs::exists(dir) && !fs::is_directory(dir)) {
    throw rsfov::InvalidArgument(a.out + " exists and is not a directory");
  }
  if (fs::exists(dir) && !fs::is_empty(dir) && !a.force) {
    throw rsfov::InvalidArgument(a.out + " is not empty; pass --force to overwrite");
  }
  fs::create_directories(dir);
  for (std::uint64_t seed = lo; seed <= hi; ++seed) {
    rsfov::GenerationConfig cfg;
    cfg.n = a.n;
    cfg.area_side = a.area;
    cfg.rho = a.rho;
    cfg.fov_width = a.fov_width;
    cfg.theta_min_range = a.theta_range;
    cfg.seed = seed;
    char name[64];
    std::snprintf(name, sizeof(name), "instance_%03llu.json", static_cast<unsigned long long>(seed));
    rsfov::save_instance(rsfov::generate_instance(cfg), (dir / name).string());
    if (seed == hi) {
      break;
    }
  }
  std::cerr << "wrote " << (hi - lo + 1) << " instance(s) to " << a.out << "\n";
  return kExitOk;
}

rsfov::TourMode parse_mode(const std::string & m)
{
  return m == "heuristic" ? rsfov::TourMode::Heuristic : rsfov::TourMode::Exact;
}

int run_plan(const PlanArgs & a)
{
  if (a.variant == "seq" && a.mode != "exact") {
    throw rsfov::InvalidArgument("--mode applies to the tour variant only");
  }
  if (a.certified && a.mode == "heuristic") {
    throw rsfov::InvalidArgument(
      "--certified cannot be combined with --mode heuristic: the heuristic relaxation value "
      "is not a lower bound");
  }
  const rsfov::Instance inst = rsfov::load_instance(a.instance);
  rsfov::ResultDocument doc;
  doc.variant = a.variant;
  doc.rho = inst.rho;
  if (a.variant == "seq") {
    std::vector<int> seq;
    if (a.sequence == "given") {
      for (const auto & w : inst.waypoints) {
        seq.push_back(w.id);
      }
    } else {
      seq = rsfov::euclidean_tsp_sequence(inst);
    }
    doc.mode = "exact";
    doc.certified = true;
    doc.plan = rsfov::plan_sequence(inst, seq, a.k, a.jobs);
  } else {
    const rsfov::TourResult r = rsfov::plan_tour(inst, a.k, parse_mode(a.mode), a.jobs);
    doc.mode = a.mode;
    doc.certified = r.certified;
    doc.plan = r.plan;
  }
  write_text(a.out, rsfov::result_to_string(doc, inst));
  if (!a.svg.empty()) {
    rsfov::detail::write_file(a.svg, rsfov::render_svg(inst, doc));
  }
  const auto & p = doc.plan;
  std::cerr << doc.variant << " k=" << p.k << ": " << rsfov::bound_label(doc.certified) << " " <<
    rsfov::detail::fmt2(p.lower_bound) << ", feasible " << rsfov::detail::fmt2(p.feasible_length) <<
    ", deviation " << rsfov::detail::fmt2(p.deviation_pct) << "%, theoretical " <<
    rsfov::detail::fmt2(p.theoretical_deviation_pct) << "%\n";
  return kExitOk;
}

int run_bench(const BenchArgs & a)
{
  if (a.variant == "seq" && a.mode != "exact") {
    throw rsfov::InvalidArgument("--mode applies to the tour variant only");
  }
  if (!fs::is_directory(a.dir)) {
    throw rsfov::InvalidArgument(a.dir + " is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto & e : fs::directory_iterator(a.dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") {
      files.push_back(e.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw rsfov::InvalidArgument(a.dir + " holds no .json instance files");
  }
  std::vector<std::pair<std::string, rsfov::Instance>> instances;
  for (const auto & f : files) {
    instances.emplace_back(f.stem().string(), rsfov::load_instance(f.string()));
  }
  rsfov::BenchmarkConfig cfg;
  cfg.variant = a.variant == "seq" ? rsfov::Variant::Sequenced : rsfov::Variant::Tour;
  cfg.mode = parse_mode(a.mode);
  cfg.ks = a.ks;
  cfg.jobs = a.jobs;
  const rsfov::BenchmarkTable t = rsfov::run_benchmark(instances, cfg);
  if (!a.csv.empty()) {
    write_text(a.csv, rsfov::benchmark_csv(t));
  }
  write_text(a.out, rsfov::benchmark_text(t));
  return kExitOk;
}

int run_render(const RenderArgs & a)
{
  const rsfov::Instance inst = rsfov::load_instance(a.instance);
  const rsfov::ResultDocument doc = rsfov::result_from_string(rsfov::detail::read_file(a.result));
  if (doc.rho != inst.rho) {
    throw rsfov::InvalidArgument("result and instance disagree on rho");
  }
  rsfov::sequence_indices(inst, doc.plan.sequence);
  write_text(a.svg, rsfov::render_svg(inst, doc));
  return kExitOk;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Shortest Reeds-Shepp paths through waypoints with heading windows"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "rsfov 1.0.0");

  GenerateArgs gen;
  auto * g = app.add_subcommand("generate", "Write random instances, one file per seed");
  g->add_option("--n", gen.n, "Waypoints per instance")->check(CLI::Range(2, 100000));
  g->add_option("--seed-range", gen.seed_range, "Seeds as A..B (inclusive) or a single seed");
  g->add_option("--out", gen.out, "Output directory")->required();
  g->add_flag("--force", gen.force, "Write into a non-empty directory, overwriting files");
  g->add_option("--area", gen.area, "Side of the square sampling area");
  g->add_option("--rho", gen.rho, "Turning radius");
  g->add_option("--fov-width", gen.fov_width, "Field-of-view width (radians)");
  g->add_option("--theta-range", gen.theta_range, "theta_min is drawn from [0, theta-range]");

  PlanArgs plan;
  auto * p = app.add_subcommand("plan", "Plan one instance and write the result document");
  p->add_option("instance", plan.instance, "Instance file")->required();
  p->add_option("--variant", plan.variant, "seq (given sequence) or tour (free sequence)")
  ->check(CLI::IsMember({"seq", "tour"}));
  p->add_option("--k", plan.k, "Sectors per heading window")->check(CLI::PositiveNumber);
  p->add_option("--mode", plan.mode, "Tour relaxation solver: exact or heuristic")
  ->check(CLI::IsMember({"exact", "heuristic"}));
  p->add_option("--sequence", plan.sequence, "seq variant: tsp (Euclidean tour) or given (file order)")
  ->check(CLI::IsMember({"tsp", "given"}));
  p->add_flag("--certified", plan.certified, "Require a certified lower bound");
  p->add_option("--out", plan.out, "Result document (default: stdout)");
  p->add_option("--svg", plan.svg, "Also render the solution to this SVG file");
  p->add_option("--jobs", plan.jobs, "Worker threads (0: all cores)");

  BenchArgs bench;
  auto * b = app.add_subcommand("bench", "Benchmark every .json instance in a directory");
  b->add_option("dir", bench.dir, "Instance directory")->required();
  b->add_option("--variant", bench.variant, "seq or tour")->check(CLI::IsMember({"seq", "tour"}));
  b->add_option("--k", bench.ks, "Comma-separated sector counts")->delimiter(',')
  ->check(CLI::PositiveNumber);
  b->add_option("--mode", bench.mode, "Tour relaxation solver: exact or heuristic")
  ->check(CLI::IsMember({"exact", "heuristic"}));
  b->add_option("--csv", bench.csv, "Write the CSV table to this file");
  b->add_option("--out", bench.out, "Text table (default: stdout)");
  b->add_option("--jobs", bench.jobs, "Instances planned concurrently (0: all cores)");

  RenderArgs render;
  auto * r = app.add_subcommand("render-only", "Render an existing result document to SVG");
  r->add_option("instance", render.instance, "Instance file")->required();
  r->add_option("result", render.result, "Result document")->required();
  r->add_option("--svg", render.svg, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (g->parsed()) {
      return run_generate(gen);
    }
    if (p->parsed()) {
      return run_plan(plan);
    }
    if (b->parsed()) {
      return run_bench(bench);
    }
    return run_render(render);
  } catch (const rsfov::SizeLimitExceeded & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const rsfov::InvariantViolation & e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const rsfov::InvalidArgument & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const rsfov::ParseError & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const rsfov::VersionError & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const fs::filesystem_error & e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception & e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
