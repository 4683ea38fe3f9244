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

#ifndef RSFOV__GEOMETRY_HPP_
#define RSFOV__GEOMETRY_HPP_

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsfov/errors.hpp"

namespace rsfov
{

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// \brief Map an angle onto [0, 2pi).
inline double normalize_angle(double a)
{
  if (!std::isfinite(a)) {
    throw InvalidArgument("normalize_angle: non-finite angle");
  }
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  // fmod of a tiny negative value plus 2pi rounds to exactly 2pi
  if (r >= kTwoPi) {
    r = 0.0;
  }
  return r;
}

/// \brief Signed difference a - b wrapped onto (-pi, pi].
inline double angle_diff(double a, double b)
{
  double d = normalize_angle(a - b);
  return d > kPi ? d - kTwoPi : d;
}

/// \brief Planar configuration. Heading is kept in [0, 2pi).
struct Pose
{
  double x{0.0};
  double y{0.0};
  double theta{0.0};

  Pose() = default;
  Pose(double x_, double y_, double theta_)
  : x(x_), y(y_), theta(normalize_angle(theta_)) {}
};

/// \brief Closed heading window [theta_min, theta_max].
///
/// Bounds are stored as given (theta_max may exceed 2pi); membership is tested on
/// the representative of an angle modulo 2pi. A zero-width window pins the heading.
class AngleInterval
{
public:
  AngleInterval() = default;
  AngleInterval(double theta_min, double theta_max)
  : min_(theta_min), max_(theta_max)
  {
    if (!std::isfinite(theta_min) || !std::isfinite(theta_max)) {
      throw InvalidArgument("AngleInterval: non-finite bound");
    }
    if (theta_max < theta_min) {
      throw InvalidArgument("AngleInterval: theta_max < theta_min");
    }
    if (theta_max - theta_min > kTwoPi + 1e-12) {
      throw InvalidArgument("AngleInterval: width exceeds 2pi");
    }
  }

  static AngleInterval fixed(double theta) {return AngleInterval(theta, theta);}

  double theta_min() const {return min_;}
  double theta_max() const {return max_;}
  double width() const {return max_ - min_;}
  bool degenerate() const {return max_ == min_;}

  /// Lift `a` to the representative in [theta_min, theta_min + 2pi).
  double lift(double a) const {return min_ + normalize_angle(a - min_);}

  /// Point at fraction t in [0, 1] along the window.
  double at(double t) const {return min_ + t * (max_ - min_);}

  bool operator==(const AngleInterval &) const = default;

private:
  double min_{0.0};
  double max_{0.0};
};

/// \brief True iff some a + 2pi*m lies in the closed interval (widened by tol).
inline bool contains(const AngleInterval & interval, double a, double tol = 1e-12)
{
  const double offset = normalize_angle(a - interval.theta_min());
  if (offset <= interval.width() + tol) {
    return true;
  }
  // a sits just below theta_min
  return offset >= kTwoPi - tol;
}

/// \brief True iff some representative lies strictly inside, at least `margin` from both ends.
inline bool interior_contains(const AngleInterval & interval, double a, double margin = 1e-12)
{
  const double offset = normalize_angle(a - interval.theta_min());
  return offset > margin && offset < interval.width() - margin;
}

enum class Steer { Left, Right, Straight };
enum class Gear { Forward, Backward };

inline double gear_sign(Gear g) {return g == Gear::Forward ? 1.0 : -1.0;}
inline Gear flip(Gear g) {return g == Gear::Forward ? Gear::Backward : Gear::Forward;}
inline double steer_sign(Steer s)
{
  return s == Steer::Left ? 1.0 : (s == Steer::Right ? -1.0 : 0.0);
}

/// \brief One piece of a Reeds-Shepp word.
///
/// `steer` is the steering-wheel direction: a Left arc keeps the turning center on the
/// vehicle's left in either gear, so L+ followed by an equal L- retraces the arc.
/// Arc magnitudes are turn angles in radians, straight magnitudes are lengths.
struct Segment
{
  Steer steer{Steer::Straight};
  Gear gear{Gear::Forward};
  double magnitude{0.0};

  bool is_arc() const {return steer != Steer::Straight;}

  /// Sign of the heading rate along the motion: +1 when the heading increases.
  double turn_sign() const {return steer_sign(steer) * gear_sign(gear);}

  bool operator==(const Segment &) const = default;
};

inline double segment_length(const Segment & s, double rho)
{
  return s.is_arc() ? s.magnitude * rho : s.magnitude;
}

/// \brief A Reeds-Shepp word with its turning radius and total length.
struct RsPath
{
  std::vector<Segment> segments;
  double rho{1.0};
  double length{0.0};

  std::size_t cusps() const
  {
    std::size_t n = 0;
    for (std::size_t i = 1; i < segments.size(); ++i) {
      n += segments[i].gear != segments[i - 1].gear;
    }
    return n;
  }
};

inline RsPath make_path(std::vector<Segment> segments, double rho)
{
  if (!(rho > 0.0)) {
    throw InvalidArgument("make_path: rho must be positive");
  }
  if (segments.size() > 5) {
    throw InvalidArgument("make_path: a Reeds-Shepp word has at most 5 segments");
  }
  RsPath p{std::move(segments), rho, 0.0};
  for (const auto & s : p.segments) {
    if (s.magnitude < 0.0) {
      throw InvalidArgument("make_path: negative segment magnitude");
    }
    p.length += segment_length(s, rho);
  }
  return p;
}

/// \brief Compact textual word, e.g. "L+R-L+" or "S+".
inline std::string word_string(std::span<const Segment> segments)
{
  std::string w;
  for (const auto & s : segments) {
    w += s.steer == Steer::Left ? 'L' : (s.steer == Steer::Right ? 'R' : 'S');
    w += s.gear == Gear::Forward ? '+' : '-';
  }
  return w;
}

inline std::string word_string(const RsPath & p) {return word_string(p.segments);}

/// \brief Raw (unnormalized) state used while chaining segments.
struct RawPose
{
  double x;
  double y;
  double theta;
};

/// Advance a raw state through a fraction `t` in [0,1] of one segment.
inline RawPose advance(const RawPose & p, const Segment & s, double rho, double t = 1.0)
{
  const double m = s.magnitude * t;
  if (!s.is_arc()) {
    const double d = gear_sign(s.gear) * m;
    return {p.x + d * std::cos(p.theta), p.y + d * std::sin(p.theta), p.theta};
  }
  const double sigma = steer_sign(s.steer);
  const double th = p.theta + sigma * gear_sign(s.gear) * m;
  return {
    p.x + rho * sigma * (std::sin(th) - std::sin(p.theta)),
    p.y + rho * sigma * (std::cos(p.theta) - std::cos(th)),
    th};
}

/// \brief Center of the turning circle of an arc starting at `p`.
inline std::pair<double, double> turn_center(const RawPose & p, Steer steer, double rho)
{
  const double sigma = steer_sign(steer);
  return {p.x - rho * sigma * std::sin(p.theta), p.y + rho * sigma * std::cos(p.theta)};
}

inline Pose path_endpoint(const RsPath & path, const Pose & start)
{
  RawPose p{start.x, start.y, start.theta};
  for (const auto & s : path.segments) {
    p = advance(p, s, path.rho);
  }
  return Pose(p.x, p.y, p.theta);
}

/// \brief Sample the path: each segment contributes `samples_per_segment` points
/// including both of its ends (shared ends are emitted once).
inline std::vector<Pose> integrate_path(
  const RsPath & path, const Pose & start, int samples_per_segment)
{
  if (samples_per_segment < 2) {
    throw InvalidArgument("integrate_path: need at least 2 samples per segment");
  }
  std::vector<Pose> out;
  out.reserve(path.segments.size() * (samples_per_segment - 1) + 1);
  out.push_back(start);
  RawPose p{start.x, start.y, start.theta};
  for (const auto & s : path.segments) {
    for (int i = 1; i < samples_per_segment; ++i) {
      const double t = static_cast<double>(i) / (samples_per_segment - 1);
      const RawPose q = advance(p, s, path.rho, t);
      out.emplace_back(q.x, q.y, q.theta);
    }
    p = advance(p, s, path.rho);
  }
  return out;
}

/// \brief Express `goal` in the frame of `start`, scaled to unit turning radius.
inline Pose to_local_frame(const Pose & start, const Pose & goal, double rho)
{
  if (!(rho > 0.0)) {
    throw InvalidArgument("to_local_frame: rho must be positive");
  }
  const double dx = goal.x - start.x;
  const double dy = goal.y - start.y;
  const double c = std::cos(start.theta);
  const double s = std::sin(start.theta);
  return Pose((c * dx + s * dy) / rho, (-s * dx + c * dy) / rho, goal.theta - start.theta);
}

/// \brief Inverse of to_local_frame.
inline Pose from_local_frame(const Pose & start, const Pose & local, double rho)
{
  if (!(rho > 0.0)) {
    throw InvalidArgument("from_local_frame: rho must be positive");
  }
  const double c = std::cos(start.theta);
  const double s = std::sin(start.theta);
  const double lx = local.x * rho;
  const double ly = local.y * rho;
  return Pose(start.x + c * lx - s * ly, start.y + s * lx + c * ly, start.theta + local.theta);
}

/// \brief The same path traversed from its end back to its start.
///
/// Time reversal flips every gear; steering directions are unchanged.
inline RsPath reverse_path(const RsPath & path)
{
  RsPath r{{path.segments.rbegin(), path.segments.rend()}, path.rho, path.length};
  for (auto & s : r.segments) {
    s.gear = flip(s.gear);
  }
  return r;
}

inline double position_error(const Pose & a, const Pose & b)
{
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double heading_error(const Pose & a, const Pose & b)
{
  return std::abs(angle_diff(a.theta, b.theta));
}

}  // namespace rsfov

#endif  // RSFOV__GEOMETRY_HPP_
