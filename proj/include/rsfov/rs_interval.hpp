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

#ifndef RSFOV__RS_INTERVAL_HPP_
#define RSFOV__RS_INTERVAL_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rsfov/geometry.hpp"
#include "rsfov/rs_point.hpp"

namespace rsfov
{

struct Point2
{
  double x{0.0};
  double y{0.0};
  bool operator==(const Point2 &) const = default;
};

/// \brief Two positioned waypoints with heading windows.
struct IntervalQuery
{
  Point2 p1;
  AngleInterval i1;
  Point2 p2;
  AngleInterval i2;
  double rho{1.0};
};

/// \brief The nine endpoint cases, numbered in their fixed reporting order.
enum class EndpointCase : int
{
  MaxMin = 1,
  MinMax = 2,
  MaxMax = 3,
  MinMin = 4,
  InteriorInterior = 5,
  MinInterior = 6,
  InteriorMin = 7,
  InteriorMax = 8,
  MaxInterior = 9,
};

inline constexpr std::array<EndpointCase, 9> kAllCases{
  EndpointCase::MaxMin, EndpointCase::MinMax, EndpointCase::MaxMax,
  EndpointCase::MinMin, EndpointCase::InteriorInterior, EndpointCase::MinInterior,
  EndpointCase::InteriorMin, EndpointCase::InteriorMax, EndpointCase::MaxInterior};

inline std::string case_name(EndpointCase c)
{
  switch (c) {
    case EndpointCase::MaxMin: return "max-min";
    case EndpointCase::MinMax: return "min-max";
    case EndpointCase::MaxMax: return "max-max";
    case EndpointCase::MinMin: return "min-min";
    case EndpointCase::InteriorInterior: return "interior-interior";
    case EndpointCase::MinInterior: return "min-interior";
    case EndpointCase::InteriorMin: return "interior-min";
    case EndpointCase::InteriorMax: return "interior-max";
    case EndpointCase::MaxInterior: return "max-interior";
  }
  return "?";
}

/// \brief Optimal interval path. Headings are reported lifted into their window,
/// i.e. theta_min <= theta <= theta_min + width.
struct IntervalSolution
{
  double length{0.0};
  double theta_dep{0.0};
  double theta_arr{0.0};
  RsPath path;
  EndpointCase case_tag{EndpointCase::InteriorInterior};
  /// Set when the grid refinement beat every case candidate by more than 1e-9 rho.
  bool refined_by_grid{false};
};

struct IntervalOptions
{
  /// Samples per window of the grid refinement; 0 disables it.
  int refine_samples{33};
  /// Golden-section stopping width in radians.
  double polish_tolerance{1e-10};
};

/// \brief Minimum of solve_p2p over an m x m grid of headings.
struct GridResult
{
  double length{0.0};
  double theta_dep{0.0};
  double theta_arr{0.0};
};

namespace detail
{

inline constexpr double kMembership = 1e-12;
inline constexpr double kEndpointTol = 1e-6;
inline constexpr int kRootSamples = 256;
inline constexpr double kRootTol = 1e-10;

inline void validate(const IntervalQuery & q)
{
  if (!(q.rho > 0.0) || !std::isfinite(q.rho)) {
    throw InvalidArgument("interval query: rho must be positive");
  }
  if (!std::isfinite(q.p1.x) || !std::isfinite(q.p1.y) || !std::isfinite(q.p2.x) ||
    !std::isfinite(q.p2.y))
  {
    throw InvalidArgument("interval query: non-finite position");
  }
}

// Side classes of a heading inside a window: bit 0 = min end, bit 1 = max end,
// bit 2 = strict interior. 0 means outside.
inline int side_classes(const AngleInterval & w, double lifted)
{
  const double off = lifted - w.theta_min();
  int c = 0;
  if (std::abs(off) <= kMembership) {
    c |= 1;
  }
  if (std::abs(w.width() - off) <= kMembership) {
    c |= 2;
  }
  if (off > kMembership && off < w.width() - kMembership) {
    c |= 4;
  }
  return c;
}

inline EndpointCase case_of(int side1, int side2)
{
  // side: 0 = min, 1 = max, 2 = interior
  static constexpr EndpointCase table[3][3] = {
    {EndpointCase::MinMin, EndpointCase::MinMax, EndpointCase::MinInterior},
    {EndpointCase::MaxMin, EndpointCase::MaxMax, EndpointCase::MaxInterior},
    {EndpointCase::InteriorMin, EndpointCase::InteriorMax, EndpointCase::InteriorInterior}};
  return table[side1][side2];
}

// Lowest-numbered case compatible with the class bitmasks, or nullopt when a heading
// is outside its window.
inline std::optional<EndpointCase> lowest_case(int c1, int c2)
{
  std::optional<EndpointCase> best;
  for (int s1 = 0; s1 < 3; ++s1) {
    if (!(c1 & (1 << s1))) {
      continue;
    }
    for (int s2 = 0; s2 < 3; ++s2) {
      if (!(c2 & (1 << s2))) {
        continue;
      }
      const EndpointCase c = case_of(s1, s2);
      if (!best || static_cast<int>(c) < static_cast<int>(*best)) {
        best = c;
      }
    }
  }
  return best;
}

// Lift a heading into the window when it is within tolerance of it.
inline std::optional<double> lift_into(const AngleInterval & w, double a)
{
  double off = normalize_angle(a - w.theta_min());
  if (off > kTwoPi - kMembership) {
    off -= kTwoPi;
  }
  if (off < -kMembership || off > w.width() + kMembership) {
    return std::nullopt;
  }
  return w.theta_min() + std::clamp(off, 0.0, w.width());
}

// Kinematic letter: +1 heading increases along the motion (l), -1 decreases (r),
// 0 straight.
struct Piece
{
  int kappa;
  bool cusp_before;  ///< gear flips relative to the previous piece
  bool free;  ///< magnitude is the parameter t
  double fixed;  ///< magnitude when not free
};

// Word with one leading free arc (pinned edge cases) or none (interior case); the
// tail depends on one scalar parameter t.
struct WordTemplate
{
  std::string name;
  int first_kappa;  ///< 0 when there is no leading arc
  std::vector<Piece> tail;
  bool t_is_length;  ///< t is a straight length rather than an angle
  double t_max;  ///< upper end of the t search range (angles)
  std::function<bool(double a, double t)> limit;
};

inline Segment make_segment(int kappa, Gear gear, double magnitude)
{
  if (kappa == 0) {
    return Segment{Steer::Straight, gear, magnitude};
  }
  const int sigma = kappa * static_cast<int>(gear_sign(gear));
  return Segment{sigma > 0 ? Steer::Left : Steer::Right, gear, magnitude};
}

// Tail pieces; `gear` is the gear of the piece preceding the tail.
inline std::vector<Segment> tail_segments(const WordTemplate & w, Gear gear, double t)
{
  std::vector<Segment> out;
  for (const auto & p : w.tail) {
    if (p.cusp_before) {
      gear = flip(gear);
    }
    out.push_back(make_segment(p.kappa, gear, p.free ? t : p.fixed));
  }
  return out;
}

inline RawPose run(RawPose p, const std::vector<Segment> & segs)
{
  for (const auto & s : segs) {
    p = advance(p, s, 1.0);
  }
  return p;
}

// All t in [0, t_hi] with f(t) = 0, located by sampling and bisection.
template<typename F>
std::vector<double> roots(F && f, double t_hi)
{
  std::vector<double> out;
  double t_prev = 0.0;
  double f_prev = f(0.0);
  if (f_prev == 0.0) {
    out.push_back(0.0);
  }
  for (int i = 1; i <= kRootSamples; ++i) {
    const double t = t_hi * i / kRootSamples;
    const double ft = f(t);
    if (ft == 0.0) {
      out.push_back(t);
    } else if ((f_prev < 0.0 && ft > 0.0) || (f_prev > 0.0 && ft < 0.0)) {
      double lo = t_prev, hi = t, flo = f_prev, fhi = ft;
      while (hi - lo > kRootTol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
          fhi = fm;
        }
      }
      // Secant step inside the final bracket.
      const double sec = lo - flo * (hi - lo) / (fhi - flo);
      out.push_back(sec >= lo && sec <= hi ? sec : 0.5 * (lo + hi));
    }
    t_prev = t;
    f_prev = ft;
  }
  return out;
}

inline double limit_tol() {return 1e-9;}

// Word lists in kinematic letters for a start pinned at theta_max. The min-pinned
// lists are the l/r mirror.
inline std::vector<WordTemplate> pinned_start_words(int mirror)
{
  const int l = mirror;
  const int r = -mirror;
  const double tol = limit_tol();
  std::vector<WordTemplate> w;
  // lS
  w.push_back(
    {"lS", l, {{0, false, true, 0.0}}, true, 0.0,
      [tol](double a, double) {return a <= kHalfPi + tol;}});
  // l|l
  w.push_back(
    {"l|l", l, {{l, true, true, 0.0}}, false, kPi,
      [tol](double a, double t) {return a + t <= kPi + tol;}});
  // l_a r_b | r_b
  w.push_back(
    {"lr|r", l, {{r, false, true, 0.0}, {r, true, true, 0.0}}, false, kHalfPi,
      [tol](double a, double t) {return a <= t + tol && t <= kHalfPi + tol;}});
  // l | l_{pi/2} S
  w.push_back(
    {"l|lS", l, {{l, true, false, kHalfPi}, {0, false, true, 0.0}}, true, 0.0,
      [tol](double a, double) {return a <= kPi + tol;}});
  return w;
}

inline std::vector<WordTemplate> interior_words()
{
  const double tol = limit_tol();
  std::vector<WordTemplate> w;
  w.push_back({"S", 0, {{0, false, true, 0.0}}, true, 0.0, [](double, double) {return true;}});
  for (int k : {+1, -1}) {
    // l_b | l_b
    w.push_back(
      {k > 0 ? "l|l" : "r|r", 0, {{k, false, true, 0.0}, {k, true, true, 0.0}}, false, kHalfPi,
        [tol](double, double t) {return t <= kHalfPi + tol;}});
    // l_{pi/2} | l_{pi/2} S
    w.push_back(
      {k > 0 ? "l|lS" : "r|rS", 0,
        {{k, false, false, kHalfPi}, {k, true, false, kHalfPi}, {0, false, true, 0.0}}, true, 0.0,
        [](double, double) {return true;}});
  }
  return w;
}

// Unit-frame view of a query: p1 at the origin, positions divided by rho.
struct UnitQuery
{
  double x2;
  double y2;
  const IntervalQuery * q;
};

inline UnitQuery unit(const IntervalQuery & q)
{
  return {(q.p2.x - q.p1.x) / q.rho, (q.p2.y - q.p1.y) / q.rho, &q};
}

inline RsPath scale_path(const std::vector<Segment> & unit_segments, double rho)
{
  std::vector<Segment> segs;
  for (Segment s : unit_segments) {
    if (s.magnitude <= 1e-12) {
      continue;
    }
    if (!s.is_arc()) {
      s.magnitude *= rho;
    }
    segs.push_back(s);
  }
  return make_path(std::move(segs), rho);
}

// Accept a candidate: verify it, classify its headings, append it.
inline void accept_candidate(
  const IntervalQuery & q, const std::vector<Segment> & unit_segments, double th1, double th2,
  int required1, int required2, std::vector<IntervalSolution> & out)
{
  const auto l1 = lift_into(q.i1, th1);
  const auto l2 = lift_into(q.i2, th2);
  if (!l1 || !l2) {
    return;
  }
  const int c1 = side_classes(q.i1, *l1) & required1;
  const int c2 = side_classes(q.i2, *l2) & required2;
  const auto tag = lowest_case(c1, c2);
  if (!tag) {
    return;
  }
  IntervalSolution s;
  s.path = scale_path(unit_segments, q.rho);
  s.length = s.path.length;
  s.theta_dep = *l1;
  s.theta_arr = *l2;
  s.case_tag = *tag;
  const Pose end = path_endpoint(s.path, Pose(q.p1.x, q.p1.y, s.theta_dep));
  const Pose want(q.p2.x, q.p2.y, s.theta_arr);
  if (position_error(end, want) > kEndpointTol * q.rho || heading_error(end, want) > kEndpointTol) {
    return;
  }
  out.push_back(std::move(s));
}

// Edge case with the start heading pinned at th1. `at_max` selects the list.
inline void solve_pinned_start(
  const IntervalQuery & q, bool at_max, std::vector<IntervalSolution> & out)
{
  const UnitQuery u = unit(q);
  const double th1 = at_max ? q.i1.theta_max() : q.i1.theta_min();
  const int required1 = at_max ? 2 : 1;
  // Re-tagging: an interior arrival that touches an end is still reported.
  const int required2 = 7;
  for (const auto & w : pinned_start_words(at_max ? +1 : -1)) {
    for (Gear g1 : {Gear::Forward, Gear::Backward}) {
      const Segment first_unit = make_segment(w.first_kappa, g1, 0.0);
      const auto [cx, cy] = turn_center(RawPose{0.0, 0.0, th1}, first_unit.steer, 1.0);
      const double target = std::hypot(u.x2 - cx, u.y2 - cy);
      auto w_of = [&](double t) {
          const RawPose e = run(RawPose{0.0, 0.0, th1}, tail_segments(w, g1, t));
          return std::pair<double, double>{e.x - cx, e.y - cy};
        };
      auto f = [&](double t) {
          const auto [wx, wy] = w_of(t);
          return std::hypot(wx, wy) - target;
        };
      double t_hi = w.t_max;
      if (w.t_is_length) {
        const auto [wx0, wy0] = w_of(0.0);
        t_hi = target + std::hypot(wx0, wy0) + 4.0;
      }
      for (double t : roots(f, t_hi)) {
        const auto [wx, wy] = w_of(t);
        const double rot = std::atan2(u.y2 - cy, u.x2 - cx) - std::atan2(wy, wx);
        const double a = normalize_angle(w.first_kappa * rot);
        if (!w.limit(a, t)) {
          continue;
        }
        std::vector<Segment> segs{make_segment(w.first_kappa, g1, a)};
        for (const auto & s : tail_segments(w, g1, t)) {
          segs.push_back(s);
        }
        const RawPose e = run(RawPose{0.0, 0.0, th1}, segs);
        accept_candidate(q, segs, th1, e.theta, required1, required2, out);
      }
    }
  }
}

inline IntervalQuery swapped(const IntervalQuery & q)
{
  return IntervalQuery{q.p2, q.i2, q.p1, q.i1, q.rho};
}

inline EndpointCase swap_case(EndpointCase c)
{
  switch (c) {
    case EndpointCase::MaxMin: return EndpointCase::MinMax;
    case EndpointCase::MinMax: return EndpointCase::MaxMin;
    case EndpointCase::MinInterior: return EndpointCase::InteriorMin;
    case EndpointCase::InteriorMin: return EndpointCase::MinInterior;
    case EndpointCase::MaxInterior: return EndpointCase::InteriorMax;
    case EndpointCase::InteriorMax: return EndpointCase::MaxInterior;
    default: return c;
  }
}

// Reverse a solution of the swapped query into one of the original query.
inline IntervalSolution unswap(const IntervalSolution & s)
{
  IntervalSolution r = s;
  r.path = reverse_path(s.path);
  r.theta_dep = s.theta_arr;
  r.theta_arr = s.theta_dep;
  r.case_tag = swap_case(s.case_tag);
  return r;
}

inline void solve_interior(const IntervalQuery & q, std::vector<IntervalSolution> & out)
{
  const UnitQuery u = unit(q);
  const double dist = std::hypot(u.x2, u.y2);
  if (dist <= 1e-12) {
    // Coincident points: the empty path when the interiors share a heading.
    const double lo1 = q.i1.theta_min() + kMembership;
    const double hi1 = q.i1.theta_max() - kMembership;
    for (int m = -2; m <= 2; ++m) {
      const double lo = std::max(lo1, q.i2.theta_min() + kMembership + m * kTwoPi);
      const double hi = std::min(hi1, q.i2.theta_max() - kMembership + m * kTwoPi);
      if (lo < hi) {
        const double th = 0.5 * (lo + hi);
        accept_candidate(q, {}, th, th, 4, 4, out);
        break;
      }
    }
  }
  const double bearing = std::atan2(u.y2, u.x2);
  for (const auto & w : interior_words()) {
    for (Gear g : {Gear::Forward, Gear::Backward}) {
      auto end_of = [&](double t) {return run(RawPose{0.0, 0.0, 0.0}, tail_segments(w, g, t));};
      auto f = [&](double t) {
          const RawPose e = end_of(t);
          return std::hypot(e.x, e.y) - dist;
        };
      double t_hi = w.t_max;
      if (w.t_is_length) {
        const RawPose e0 = end_of(0.0);
        t_hi = dist + std::hypot(e0.x, e0.y) + 4.0;
      }
      for (double t : roots(f, t_hi)) {
        if (!w.limit(0.0, t)) {
          continue;
        }
        const auto segs = tail_segments(w, g, t);
        const RawPose e = run(RawPose{0.0, 0.0, 0.0}, segs);
        const double th1 = bearing - std::atan2(e.y, e.x);
        accept_candidate(q, segs, th1, th1 + e.theta, 7, 7, out);
      }
    }
  }
}

// Kinematic token string of a path, e.g. "l|lSl" (zero pieces dropped).
inline std::string kinematic_word(std::span<const Segment> segs)
{
  std::string w;
  const Segment * prev = nullptr;
  for (const auto & s : segs) {
    if (s.magnitude <= 1e-12) {
      continue;
    }
    if (prev && prev->gear != s.gear) {
      w += '|';
    }
    if (!s.is_arc()) {
      w += 'S';
    } else {
      w += s.turn_sign() > 0 ? 'l' : 'r';
    }
    prev = &s;
  }
  return w;
}

inline std::string letters(const std::string & w)
{
  std::string out;
  for (char c : w) {
    if (c != '|') {
      out += c;
    }
  }
  return out;
}

inline bool is_subsequence(const std::string & small, const std::string & big)
{
  std::size_t j = 0;
  for (char c : big) {
    if (j < small.size() && small[j] == c) {
      ++j;
    }
  }
  return j == small.size();
}

inline std::size_t cusp_count(const std::string & w)
{
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), '|'));
}

// Corner word lists in kinematic letters.
inline std::vector<std::string> corner_words(EndpointCase c)
{
  auto mirror = [](std::vector<std::string> v) {
      for (auto & w : v) {
        for (auto & ch : w) {
          ch = ch == 'l' ? 'r' : (ch == 'r' ? 'l' : ch);
        }
      }
      return v;
    };
  const std::vector<std::string> max_min{
    "l|l|l", "lSl", "l|l", "lr|rl", "l|lSl|l", "l|lSl", "lSl|l"};
  const std::vector<std::string> max_max{
    "lSr", "l|lr", "lr|r", "l|lr|r", "l|lSr|r", "l|lSr", "lSr|r"};
  switch (c) {
    case EndpointCase::MaxMin: return max_min;
    case EndpointCase::MinMax: return mirror(max_min);
    case EndpointCase::MaxMax: return max_max;
    case EndpointCase::MinMin: return mirror(max_max);
    default: return {};
  }
}

inline bool matches_corner_list(const std::string & word, EndpointCase c)
{
  if (word.empty()) {
    return true;
  }
  for (const auto & pattern : corner_words(c)) {
    if (is_subsequence(letters(word), letters(pattern)) &&
      cusp_count(word) <= cusp_count(pattern))
    {
      return true;
    }
  }
  return false;
}

inline bool case_pins(EndpointCase c, bool & pin1, bool & max1, bool & pin2, bool & max2)
{
  switch (c) {
    case EndpointCase::MaxMin: pin1 = true; max1 = true; pin2 = true; max2 = false; return true;
    case EndpointCase::MinMax: pin1 = true; max1 = false; pin2 = true; max2 = true; return true;
    case EndpointCase::MaxMax: pin1 = true; max1 = true; pin2 = true; max2 = true; return true;
    case EndpointCase::MinMin: pin1 = true; max1 = false; pin2 = true; max2 = false; return true;
    default: return false;
  }
}

inline void solve_corner(
  const IntervalQuery & q, EndpointCase c, bool filter, std::vector<IntervalSolution> & out)
{
  bool pin1 = false, max1 = false, pin2 = false, max2 = false;
  case_pins(c, pin1, max1, pin2, max2);
  const double th1 = max1 ? q.i1.theta_max() : q.i1.theta_min();
  const double th2 = max2 ? q.i2.theta_max() : q.i2.theta_min();
  const Pose start(q.p1.x, q.p1.y, th1);
  const Pose goal(q.p2.x, q.p2.y, th2);
  const Pose local = to_local_frame(start, goal, q.rho);
  for_each_candidate(
    local, CandidateOptions{}, [&](const CandidateWord & w) {
      if (filter && !matches_corner_list(kinematic_word(w.view()), c)) {
        return;
      }
      IntervalSolution s;
      s.path = to_path(w, q.rho);
      s.length = s.path.length;
      s.theta_dep = th1;
      s.theta_arr = th2;
      s.case_tag = c;
      out.push_back(std::move(s));
    });
}

inline bool better(const IntervalSolution & a, const IntervalSolution & b)
{
  const double tol = 1e-9 * std::max(1.0, b.length);
  if (a.length < b.length - tol) {
    return true;
  }
  if (b.length < a.length - tol) {
    return false;
  }
  return static_cast<int>(a.case_tag) < static_cast<int>(b.case_tag);
}

inline double p2p_length(const IntervalQuery & q, double th1, double th2)
{
  return shortest_length(Pose(q.p1.x, q.p1.y, th1), Pose(q.p2.x, q.p2.y, th2), q.rho);
}

/// \brief Same result as the plain m x m grid minimum, with nodes skipped when a
/// turn-in-place bound from an evaluated neighbour proves them worse than the incumbent.
inline GridResult pruned_grid(const IntervalQuery & q, int m)
{
  constexpr int kStride = 4;
  const auto um = static_cast<std::size_t>(m);
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> value(um * um, inf);
  std::vector<double> th1(um), th2(um);
  for (int i = 0; i < m; ++i) {
    th1[static_cast<std::size_t>(i)] = q.i1.at(static_cast<double>(i) / (m - 1));
    th2[static_cast<std::size_t>(i)] = q.i2.at(static_cast<double>(i) / (m - 1));
  }
  auto coarse = [&](int i) {return i % kStride == 0 || i == m - 1;};
  auto nearest = [&](int i) {
      const int down = i - i % kStride;
      const int up = std::min(down + kStride, m - 1);
      return i - down <= up - i ? down : up;
    };
  double best = inf;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (coarse(i) && coarse(j)) {
        const double v = p2p_length(q, th1[static_cast<std::size_t>(i)], th2[static_cast<std::size_t>(j)]);
        value[static_cast<std::size_t>(i) * um + static_cast<std::size_t>(j)] = v;
        best = std::min(best, v);
      }
    }
  }
  const double slack = 1e-9 * std::max(1.0, best);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double & v = value[static_cast<std::size_t>(i) * um + static_cast<std::size_t>(j)];
      if (coarse(i) && coarse(j)) {
        continue;
      }
      const int ci = nearest(i);
      const int cj = nearest(j);
      const double d1 = std::abs(th1[static_cast<std::size_t>(i)] - th1[static_cast<std::size_t>(ci)]);
      const double d2 = std::abs(th2[static_cast<std::size_t>(j)] - th2[static_cast<std::size_t>(cj)]);
      const double lower =
        value[static_cast<std::size_t>(ci) * um + static_cast<std::size_t>(cj)] -
        reconfiguration_bound(std::min(kPi, d1), q.rho) -
        reconfiguration_bound(std::min(kPi, d2), q.rho);
      if (lower > best + slack) {
        continue;
      }
      v = p2p_length(q, th1[static_cast<std::size_t>(i)], th2[static_cast<std::size_t>(j)]);
      best = std::min(best, v);
    }
  }
  // First minimum in row-major order, as in the plain scan.
  GridResult out{inf, 0.0, 0.0};
  for (std::size_t i = 0; i < um; ++i) {
    for (std::size_t j = 0; j < um; ++j) {
      if (value[i * um + j] < out.length) {
        out = {value[i * um + j], th1[i], th2[j]};
      }
    }
  }
  return out;
}

template<typename F>
double golden_section(F && f, double lo, double hi, double tol, double & best_x, double & best_f)
{
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  auto note = [&](double x, double fx) {
      if (fx < best_f) {
        best_f = fx;
        best_x = x;
      }
    };
  note(c, fc);
  note(d, fd);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      note(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      note(d, fd);
    }
  }
  return best_f;
}

}  // namespace detail

/// \brief p2p lengths at (min,min), (min,max), (max,min), (max,max).
inline std::array<double, 4> corner_lengths(const IntervalQuery & q)
{
  detail::validate(q);
  const double a[2] = {q.i1.theta_min(), q.i1.theta_max()};
  const double b[2] = {q.i2.theta_min(), q.i2.theta_max()};
  std::array<double, 4> out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i * 2 + j] = detail::p2p_length(q, a[i], b[j]);
    }
  }
  return out;
}

/// \brief All candidate solutions of one endpoint case.
///
/// Corner cases return the point-to-point candidates at the pinned headings whose
/// kinematic word is (a sub-word of) an entry of the case's list. Edge and interior
/// cases solve each listed word for its free heading(s) by 1-D root finding. A
/// solution whose free heading lands on a window end is reported under that end's
/// case, so entries may carry a different tag than `c`.
inline std::vector<IntervalSolution> case_candidates(const IntervalQuery & q, EndpointCase c)
{
  detail::validate(q);
  std::vector<IntervalSolution> out;
  switch (c) {
    case EndpointCase::MaxMin:
    case EndpointCase::MinMax:
    case EndpointCase::MaxMax:
    case EndpointCase::MinMin:
      detail::solve_corner(q, c, true, out);
      break;
    case EndpointCase::InteriorInterior:
      detail::solve_interior(q, out);
      break;
    case EndpointCase::MinInterior:
      detail::solve_pinned_start(q, false, out);
      break;
    case EndpointCase::MaxInterior:
      detail::solve_pinned_start(q, true, out);
      break;
    case EndpointCase::InteriorMin:
    case EndpointCase::InteriorMax: {
      std::vector<IntervalSolution> sw;
      detail::solve_pinned_start(
        detail::swapped(q), c == EndpointCase::InteriorMax, sw);
      for (const auto & s : sw) {
        out.push_back(detail::unswap(s));
      }
      break;
    }
  }
  return out;
}

/// \brief Minimum of solve_p2p over the m x m heading grid, endpoints included.
inline GridResult grid_oracle(const IntervalQuery & q, int m)
{
  detail::validate(q);
  if (m < 2) {
    throw InvalidArgument("grid_oracle: m must be at least 2");
  }
  GridResult best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (int i = 0; i < m; ++i) {
    const double t1 = q.i1.at(static_cast<double>(i) / (m - 1));
    for (int j = 0; j < m; ++j) {
      const double t2 = q.i2.at(static_cast<double>(j) / (m - 1));
      const double len = detail::p2p_length(q, t1, t2);
      if (len < best.length) {
        best = {len, t1, t2};
      }
    }
  }
  return best;
}

/// \brief Worst-case excess of grid_oracle(q, m) over the true interval optimum.
///
/// The optimal headings are within half a grid step h/2 of a grid node at each end;
/// turning in place by h/2 costs at most reconfiguration_bound(h/2, rho).
inline double grid_error_bound(const IntervalQuery & q, int m)
{
  if (m < 2) {
    throw InvalidArgument("grid_error_bound: m must be at least 2");
  }
  const double h1 = q.i1.width() / (m - 1);
  const double h2 = q.i2.width() / (m - 1);
  return reconfiguration_bound(std::min(kPi, 0.5 * h1), q.rho) +
         reconfiguration_bound(std::min(kPi, 0.5 * h2), q.rho);
}

/// \brief Shortest path between two positions with interval-constrained headings.
inline IntervalSolution solve_interval(const IntervalQuery & q, const IntervalOptions & opts = {})
{
  detail::validate(q);
  std::optional<IntervalSolution> best;
  auto offer = [&](const IntervalSolution & s) {
      if (!best || detail::better(s, *best)) {
        best = s;
      }
    };
  // Corners use the full point-to-point optimum.
  for (EndpointCase c : {EndpointCase::MaxMin, EndpointCase::MinMax, EndpointCase::MaxMax,
      EndpointCase::MinMin})
  {
    std::vector<IntervalSolution> v;
    detail::solve_corner(q, c, false, v);
    for (const auto & s : v) {
      offer(s);
    }
  }
  if (!q.i1.degenerate() || !q.i2.degenerate()) {
    for (EndpointCase c : {EndpointCase::InteriorInterior, EndpointCase::MinInterior,
        EndpointCase::InteriorMin, EndpointCase::InteriorMax, EndpointCase::MaxInterior})
    {
      for (const auto & s : case_candidates(q, c)) {
        offer(s);
      }
    }
  }
  if (!best) {
    throw InvariantViolation("solve_interval: no candidate found");
  }

  // Grid refinement with a golden-section polish of the best cell.
  const int m = opts.refine_samples;
  if (m >= 2 && (!q.i1.degenerate() || !q.i2.degenerate())) {
    const GridResult g = detail::pruned_grid(q, m);
    double b1 = g.theta_dep;
    double b2 = g.theta_arr;
    double bf = g.length;
    const double h1 = q.i1.width() / (m - 1);
    const double h2 = q.i2.width() / (m - 1);
    for (int round = 0; round < 3; ++round) {
      const double before = bf;
      if (h1 > 0.0) {
        detail::golden_section(
          [&](double t) {return detail::p2p_length(q, t, b2);},
          std::max(q.i1.theta_min(), b1 - h1), std::min(q.i1.theta_max(), b1 + h1),
          opts.polish_tolerance, b1, bf);
      }
      if (h2 > 0.0) {
        detail::golden_section(
          [&](double t) {return detail::p2p_length(q, b1, t);},
          std::max(q.i2.theta_min(), b2 - h2), std::min(q.i2.theta_max(), b2 + h2),
          opts.polish_tolerance, b2, bf);
      }
      if (before - bf <= 1e-12 * std::max(1.0, bf)) {
        break;
      }
    }
    if (bf < best->length - 1e-9 * std::max(1.0, best->length)) {
      IntervalSolution s;
      s.path = solve_p2p(Pose(q.p1.x, q.p1.y, b1), Pose(q.p2.x, q.p2.y, b2), q.rho);
      s.length = s.path.length;
      s.theta_dep = b1;
      s.theta_arr = b2;
      const auto tag = detail::lowest_case(
        detail::side_classes(q.i1, b1), detail::side_classes(q.i2, b2));
      s.case_tag = tag.value_or(EndpointCase::InteriorInterior);
      s.refined_by_grid = true;
      best = s;
    }
  }
  return *best;
}

}  // namespace rsfov

#endif  // RSFOV__RS_INTERVAL_HPP_
