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

#ifndef RSFOV__RS_POINT_HPP_
#define RSFOV__RS_POINT_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rsfov/geometry.hpp"

namespace rsfov
{

/// \brief A closed-form instance of one of the seven sufficient path types.
///
/// Segments are in the canonical frame (start at the origin, unit turning radius).
/// Zero-magnitude pieces of the template are kept so that the type's limitation can
/// be checked on the full parameter set; `to_path` drops them.
struct CandidateWord
{
  int path_type{0};  ///< 1..7, row of the sufficient family
  std::array<Segment, 5> segments{};
  int count{0};
  double a{0.0};
  double b{0.0};
  double e{0.0};
  double d{0.0};
  double length{0.0};  ///< unit-radius length

  std::span<const Segment> view() const {return {segments.data(), static_cast<std::size_t>(count)};}
};

struct CandidateOptions
{
  /// Discard words violating their type's limitation column.
  bool enforce_limitations{true};
  /// Endpoint tolerance in the canonical frame.
  double endpoint_tolerance{1e-8};
};

namespace detail
{

/// Sign tolerance of the inversions.
inline constexpr double kZero = 1e-9;
inline constexpr double kLimitTol = 1e-9;
inline constexpr double kZeroSegment = 1e-12;

/// Wrap onto (-pi, pi].
inline double wrap_pi(double x)
{
  double v = std::fmod(x, kTwoPi);
  if (v < -kPi) {
    v += kTwoPi;
  } else if (v > kPi) {
    v -= kTwoPi;
  }
  return v;
}

/// 1 - cos(phi) without cancellation near zero.
inline double versine(double phi)
{
  const double s = std::sin(0.5 * phi);
  return 2.0 * s * s;
}

inline void polar(double x, double y, double & r, double & theta)
{
  r = std::hypot(x, y);
  theta = std::atan2(y, x);
}

enum class Family { CSC, CCC, CCCCSplit, CCCCCusp, CCSC, CCSCC };

// Word in the steering convention with signed parameters (sign = gear).
struct RawWord
{
  Family family;
  std::array<Steer, 5> steer;
  std::array<double, 5> param;
  int n;
};

constexpr Steer L = Steer::Left;
constexpr Steer R = Steer::Right;
constexpr Steer S = Steer::Straight;

// Closed-form inversions of the classic base words. Each returns false when the
// word cannot reach (x, y, phi) with the sign pattern it encodes.

inline bool lp_sp_lp(
  double x, double y, double phi, double sphi, double /*cphi*/, double & t, double & u, double & v)
{
  polar(x - sphi, y - versine(phi), u, t);
  if (t >= -kZero) {
    v = wrap_pi(phi - t);
    if (v >= -kZero) {
      return true;
    }
  }
  return false;
}

inline bool lp_sp_rp(
  double x, double y, double phi, double sphi, double cphi, double & t, double & u, double & v)
{
  double t1, u1;
  polar(x + sphi, y - 1.0 - cphi, u1, t1);
  u1 = u1 * u1;
  if (u1 >= 4.0 - kZero) {
    u = std::sqrt(std::max(0.0, u1 - 4.0));
    const double theta = std::atan2(2.0, u);
    t = wrap_pi(t1 + theta);
    v = wrap_pi(t - phi);
    return t >= -kZero && v >= -kZero;
  }
  return false;
}

inline bool lp_rm_l(
  double x, double y, double phi, double sphi, double /*cphi*/, double & t, double & u, double & v)
{
  double u1, theta;
  polar(x - sphi, y - versine(phi), u1, theta);
  if (u1 <= 4.0) {
    u = -2.0 * std::asin(0.25 * u1);
    t = wrap_pi(theta + 0.5 * u + kPi);
    v = wrap_pi(phi - t + u);
    return t >= -kZero && u <= kZero;
  }
  return false;
}

inline void tau_omega(
  double u, double v, double xi, double eta, double phi, double & tau, double & omega)
{
  const double delta = wrap_pi(u - v);
  const double A = std::sin(u) - std::sin(delta);
  const double B = std::cos(u) - std::cos(delta) - 1.0;
  const double t1 = std::atan2(eta * A - xi * B, xi * A + eta * B);
  const double t2 = 2.0 * (std::cos(delta) - std::cos(v) - std::cos(u)) + 3.0;
  tau = (t2 < 0.0) ? wrap_pi(t1 + kPi) : wrap_pi(t1);
  omega = wrap_pi(tau - u + v - phi);
}

inline bool lp_rup_lum_rm(
  double x, double y, double phi, double sphi, double cphi, double & t, double & u, double & v)
{
  const double xi = x + sphi;
  const double eta = y - 1.0 - cphi;
  const double rho = 0.25 * (2.0 + std::hypot(xi, eta));
  if (rho <= 1.0) {
    u = std::acos(rho);
    tau_omega(u, -u, xi, eta, phi, t, v);
    return t >= -kZero && v <= kZero;
  }
  return false;
}

inline bool lp_rum_lum_rp(
  double x, double y, double phi, double sphi, double cphi, double & t, double & u, double & v)
{
  const double xi = x + sphi;
  const double eta = y - 1.0 - cphi;
  const double rho = (20.0 - xi * xi - eta * eta) / 16.0;
  if (rho >= 0.0 && rho <= 1.0) {
    u = -std::acos(rho);
    if (u >= -kHalfPi) {
      tau_omega(u, u, xi, eta, phi, t, v);
      return t >= -kZero && v >= -kZero;
    }
  }
  return false;
}

inline bool lp_rm_sm_lm(
  double x, double y, double phi, double sphi, double /*cphi*/, double & t, double & u, double & v)
{
  double rho, theta;
  polar(x - sphi, y - versine(phi), rho, theta);
  if (rho >= 2.0) {
    const double r = std::sqrt(rho * rho - 4.0);
    u = 2.0 - r;
    t = wrap_pi(theta + std::atan2(r, -2.0));
    v = wrap_pi(phi - kHalfPi - t);
    return t >= -kZero && u <= kZero && v <= kZero;
  }
  return false;
}

inline bool lp_rm_sm_rm(
  double x, double y, double phi, double sphi, double cphi, double & t, double & u, double & v)
{
  double rho, theta;
  const double xi = x + sphi;
  const double eta = y - 1.0 - cphi;
  polar(-eta, xi, rho, theta);
  if (rho >= 2.0) {
    t = theta;
    u = 2.0 - rho;
    v = wrap_pi(t + kHalfPi - phi);
    return t >= -kZero && u <= kZero && v <= kZero;
  }
  return false;
}

inline bool lp_rm_s_lm_rp(
  double x, double y, double phi, double sphi, double cphi, double & t, double & u, double & v)
{
  double rho, theta;
  const double xi = x + sphi;
  const double eta = y - 1.0 - cphi;
  polar(xi, eta, rho, theta);
  if (rho >= 2.0) {
    u = 4.0 - std::sqrt(rho * rho - 4.0);
    if (u <= kZero) {
      t = wrap_pi(std::atan2((4.0 - u) * xi - 2.0 * eta, -2.0 * xi + (u - 4.0) * eta));
      v = wrap_pi(t - phi);
      return t >= -kZero && v >= -kZero;
    }
  }
  return false;
}

// Base solvers evaluated at one transformed goal. `emit` receives words in the
// canonical orientation of the transformed goal.
template<typename Emit>
void base_words(
  double x, double y, double phi, double sphi, double cphi, bool backwards_only, Emit && emit)
{
  double t, u, v;
  if (!backwards_only) {
    if (lp_sp_lp(x, y, phi, sphi, cphi, t, u, v)) {
      emit(RawWord{Family::CSC, {L, S, L}, {t, u, v}, 3});
    }
    if (lp_sp_rp(x, y, phi, sphi, cphi, t, u, v)) {
      emit(RawWord{Family::CSC, {L, S, R}, {t, u, v}, 3});
    }
    if (lp_rup_lum_rm(x, y, phi, sphi, cphi, t, u, v)) {
      emit(RawWord{Family::CCCCSplit, {L, R, L, R}, {t, u, -u, v}, 4});
    }
    if (lp_rum_lum_rp(x, y, phi, sphi, cphi, t, u, v)) {
      emit(RawWord{Family::CCCCCusp, {L, R, L, R}, {t, u, u, v}, 4});
    }
    if (lp_rm_s_lm_rp(x, y, phi, sphi, cphi, t, u, v)) {
      emit(RawWord{Family::CCSCC, {L, R, S, L, R}, {t, -kHalfPi, u, -kHalfPi, v}, 5});
    }
  }
  // Words whose reversal is a different word are solved both ways; the caller
  // passes the backwards goal and reverses the result.
  if (lp_rm_l(x, y, phi, sphi, cphi, t, u, v)) {
    emit(RawWord{Family::CCC, {L, R, L}, {t, u, v}, 3});
  }
  if (lp_rm_sm_lm(x, y, phi, sphi, cphi, t, u, v)) {
    emit(RawWord{Family::CCSC, {L, R, S, L}, {t, -kHalfPi, u, v}, 4});
  }
  if (lp_rm_sm_rm(x, y, phi, sphi, cphi, t, u, v)) {
    emit(RawWord{Family::CCSC, {L, R, S, R}, {t, -kHalfPi, u, v}, 4});
  }
}

inline Steer swap_lr(Steer s)
{
  return s == L ? R : (s == R ? L : S);
}

// Visit every raw word of the 48-word family (before limitation filtering).
template<typename Visit>
void all_raw_words(double x, double y, double phi, Visit && visit)
{
  const double sphi = std::sin(phi);
  const double cphi = std::cos(phi);
  const double xb = x * cphi + y * sphi;
  const double yb = x * sphi - y * cphi;
  for (int backwards = 0; backwards < 2; ++backwards) {
    const double bx = backwards ? xb : x;
    const double by = backwards ? yb : y;
    for (int sym = 0; sym < 4; ++sym) {
      const bool timeflip = sym & 1;
      const bool reflect = sym & 2;
      const double tx = timeflip ? -bx : bx;
      const double ty = reflect ? -by : by;
      const bool negate = timeflip != reflect;
      base_words(
        tx, ty, negate ? -phi : phi, negate ? -sphi : sphi, cphi, backwards != 0, [&](RawWord w) {
          for (int i = 0; i < w.n; ++i) {
            if (timeflip) {
              w.param[i] = -w.param[i];
            }
            if (reflect) {
              w.steer[i] = swap_lr(w.steer[i]);
            }
          }
          if (backwards) {
            std::reverse(w.steer.begin(), w.steer.begin() + w.n);
            std::reverse(w.param.begin(), w.param.begin() + w.n);
          }
          visit(w);
        });
    }
  }
}

inline bool is_zero(double m) {return m <= kZeroSegment;}

// Gears of two neighbours may differ (a cusp), counting zero pieces as wildcards.
inline bool may_cusp(const Segment & p, const Segment & q)
{
  return p.gear != q.gear || is_zero(p.magnitude) || is_zero(q.magnitude);
}
inline bool may_join(const Segment & p, const Segment & q)
{
  return p.gear == q.gear || is_zero(p.magnitude) || is_zero(q.magnitude);
}

inline bool type3_ok(double a, double b, double e)
{
  if (a > b + kLimitTol || e > b + kLimitTol || b > kHalfPi + kLimitTol) {
    return false;
  }
  if (std::abs(a - b) <= kLimitTol && b > kPi / 3.0 + kLimitTol) {
    return false;
  }
  return true;
}

// Classify a converted word into its row of the sufficient family and check the
// limitation column. Returns false when no row admits it.
inline bool classify(RawWord const & raw, CandidateWord & c)
{
  const auto & s = c.segments;
  switch (raw.family) {
    case Family::CSC:
      c.path_type = 2;
      c.a = s[0].magnitude;
      c.d = s[1].magnitude;
      c.b = s[2].magnitude;
      return c.a <= kHalfPi + kLimitTol && c.b <= kHalfPi + kLimitTol;
    case Family::CCC: {
      const double m0 = s[0].magnitude, m1 = s[1].magnitude, m2 = s[2].magnitude;
      if (may_cusp(s[0], s[1]) && may_cusp(s[1], s[2]) && m0 + m1 + m2 <= kPi + kLimitTol) {
        c.path_type = 1;
        c.a = m0;
        c.b = m1;
        c.e = m2;
        return true;
      }
      if (may_cusp(s[0], s[1]) && may_join(s[1], s[2]) && type3_ok(m0, m1, m2)) {
        c.path_type = 3;
        c.a = m0;
        c.b = m1;
        c.e = m2;
        return true;
      }
      if (may_join(s[0], s[1]) && may_cusp(s[1], s[2]) && type3_ok(m2, m1, m0)) {
        c.path_type = 3;
        c.a = m2;
        c.b = m1;
        c.e = m0;
        return true;
      }
      return false;
    }
    case Family::CCCCCusp:
      c.path_type = 4;
      c.a = s[0].magnitude;
      c.b = s[1].magnitude;
      c.e = s[3].magnitude;
      return c.a <= c.b + kLimitTol && c.e <= c.b + kLimitTol && c.b <= kHalfPi + kLimitTol;
    case Family::CCCCSplit:
      c.path_type = 5;
      c.a = s[0].magnitude;
      c.b = s[1].magnitude;
      c.e = s[3].magnitude;
      return c.a <= c.b + kLimitTol && c.e <= c.b + kLimitTol && c.b <= kPi / 3.0 + kLimitTol;
    case Family::CCSC: {
      c.path_type = 7;
      // C_a | C_pi/2 S_d C_b, or its reversal C_b S_d C_pi/2 | C_a
      const bool forward_form = s[2].steer == Steer::Straight;
      c.a = forward_form ? s[0].magnitude : s[3].magnitude;
      c.b = forward_form ? s[3].magnitude : s[0].magnitude;
      c.d = forward_form ? s[2].magnitude : s[1].magnitude;
      return c.a <= kPi + kLimitTol && c.b <= kHalfPi + kLimitTol;
    }
    case Family::CCSCC:
      c.path_type = 6;
      c.a = s[0].magnitude;
      c.d = s[2].magnitude;
      c.b = s[4].magnitude;
      return c.a <= kHalfPi + kLimitTol && c.b <= kHalfPi + kLimitTol;
  }
  return false;
}

inline bool reaches(const CandidateWord & c, const Pose & goal, double tol)
{
  RawPose p{0.0, 0.0, 0.0};
  for (int i = 0; i < c.count; ++i) {
    p = advance(p, c.segments[i], 1.0);
  }
  return std::hypot(p.x - goal.x, p.y - goal.y) <= tol &&
         std::abs(angle_diff(p.theta, goal.theta)) <= tol;
}

inline int nonzero_count(const CandidateWord & c)
{
  int n = 0;
  for (int i = 0; i < c.count; ++i) {
    n += !is_zero(c.segments[i].magnitude);
  }
  return n;
}

inline int nonzero_cusps(const CandidateWord & c)
{
  int n = 0;
  const Segment * prev = nullptr;
  for (int i = 0; i < c.count; ++i) {
    if (is_zero(c.segments[i].magnitude)) {
      continue;
    }
    if (prev && prev->gear != c.segments[i].gear) {
      ++n;
    }
    prev = &c.segments[i];
  }
  return n;
}

inline std::string nonzero_word(const CandidateWord & c)
{
  std::vector<Segment> kept;
  for (int i = 0; i < c.count; ++i) {
    if (!is_zero(c.segments[i].magnitude)) {
      kept.push_back(c.segments[i]);
    }
  }
  return word_string(kept);
}

}  // namespace detail

namespace detail
{

// Convert, classify and verify one raw word. Words longer than `cutoff` are
// rejected before the endpoint integration.
inline bool accept(
  const RawWord & raw, const Pose & goal_local, const CandidateOptions & opts, double cutoff,
  CandidateWord & c)
{
  c.count = raw.n;
  c.length = 0.0;
  for (int i = 0; i < raw.n; ++i) {
    const double p = raw.param[i];
    c.segments[i] = Segment{raw.steer[i], p < 0.0 ? Gear::Backward : Gear::Forward, std::abs(p)};
    c.length += std::abs(p);
  }
  if (c.length > cutoff) {
    return false;
  }
  const bool admissible = classify(raw, c);
  if (opts.enforce_limitations && !admissible) {
    return false;
  }
  return reaches(c, goal_local, opts.endpoint_tolerance);
}

}  // namespace detail

/// \brief Visit every admissible candidate word reaching `goal_local` from the origin.
///
/// `goal_local` is expressed in the canonical frame (see to_local_frame). Each visited
/// word reaches the goal within `opts.endpoint_tolerance` and, unless disabled,
/// satisfies the limitation of its path type.
template<typename Visit>
void for_each_candidate(const Pose & goal_local, const CandidateOptions & opts, Visit && visit)
{
  // Work with the heading in (-pi, pi]; the base inversions assume that range.
  const double phi = detail::wrap_pi(goal_local.theta);
  detail::all_raw_words(
    goal_local.x, goal_local.y, phi, [&](const detail::RawWord & raw) {
      CandidateWord c;
      if (!detail::accept(raw, goal_local, opts, std::numeric_limits<double>::infinity(), c)) {
        return;
      }
      visit(c);
    });
}

/// \brief All admissible candidates between the origin and `goal_local`.
inline std::vector<CandidateWord> enumerate_candidates(
  const Pose & goal_local, const CandidateOptions & opts = {})
{
  std::vector<CandidateWord> out;
  for_each_candidate(goal_local, opts, [&](const CandidateWord & c) {out.push_back(c);});
  return out;
}

/// \brief Strict ordering used to pick one word among equal-length optima.
inline bool candidate_less(const CandidateWord & x, const CandidateWord & y)
{
  constexpr double kTie = 1e-10;
  if (x.length < y.length - kTie * std::max(1.0, y.length)) {
    return true;
  }
  if (y.length < x.length - kTie * std::max(1.0, x.length)) {
    return false;
  }
  const int sx = detail::nonzero_count(x), sy = detail::nonzero_count(y);
  if (sx != sy) {
    return sx < sy;
  }
  const int cx = detail::nonzero_cusps(x), cy = detail::nonzero_cusps(y);
  if (cx != cy) {
    return cx < cy;
  }
  return detail::nonzero_word(x) < detail::nonzero_word(y);
}

/// \brief Drop zero pieces and scale to an RsPath of radius rho.
inline RsPath to_path(const CandidateWord & c, double rho)
{
  std::vector<Segment> kept;
  for (int i = 0; i < c.count; ++i) {
    Segment s = c.segments[i];
    if (detail::is_zero(s.magnitude)) {
      continue;
    }
    if (!s.is_arc()) {
      s.magnitude *= rho;
    }
    kept.push_back(s);
  }
  return make_path(std::move(kept), rho);
}

/// \brief Shortest Reeds-Shepp path between two fully specified poses.
inline RsPath solve_p2p(const Pose & start, const Pose & goal, double rho)
{
  const Pose local = to_local_frame(start, goal, rho);
  bool found = false;
  CandidateWord best;
  for_each_candidate(
    local, CandidateOptions{}, [&](const CandidateWord & c) {
      if (!found || candidate_less(c, best)) {
        best = c;
        found = true;
      }
    });
  if (!found) {
    throw InvariantViolation("solve_p2p: no admissible word reaches the goal");
  }
  return to_path(best, rho);
}

/// \brief Length of solve_p2p(start, goal, rho) without building the path.
inline double shortest_length(const Pose & start, const Pose & goal, double rho)
{
  const Pose local = to_local_frame(start, goal, rho);
  double best = std::numeric_limits<double>::infinity();
  const CandidateOptions opts{};
  const double phi = detail::wrap_pi(local.theta);
  detail::all_raw_words(
    local.x, local.y, phi, [&](const detail::RawWord & raw) {
      CandidateWord c;
      if (detail::accept(raw, local, opts, best, c)) {
        best = c.length;
      }
    });
  if (!std::isfinite(best)) {
    throw InvariantViolation("shortest_length: no admissible word reaches the goal");
  }
  return best * rho;
}

/// \brief Length of the four-piece turn-in-place maneuver that rotates the heading
/// by delta_theta while returning to the same point: 2 rho dtheta + 2 rho sin(dtheta/2).
///
/// Never exceeds 3 rho dtheta, and dominates the shortest path between
/// (0, 0, delta_theta) and (0, 0, 0).
inline double reconfiguration_bound(double delta_theta, double rho)
{
  if (!(delta_theta >= 0.0 && delta_theta <= kPi)) {
    throw InvalidArgument("reconfiguration_bound: delta_theta must lie in [0, pi]");
  }
  if (!(rho > 0.0)) {
    throw InvalidArgument("reconfiguration_bound: rho must be positive");
  }
  return 2.0 * rho * delta_theta + 2.0 * rho * std::sin(0.5 * delta_theta);
}

}  // namespace rsfov

#endif  // RSFOV__RS_POINT_HPP_
