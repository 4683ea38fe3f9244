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

#ifndef RSFOV__RESULT_IO_HPP_
#define RSFOV__RESULT_IO_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsfov/instance_io.hpp"
#include "rsfov/tour_planner.hpp"

namespace rsfov
{

/// \brief Result schema version written and accepted by this build.
inline constexpr int kResultSchemaVersion = 1;

/// \brief A planning outcome with the labels needed to interpret its bound.
struct ResultDocument
{
  std::string variant{"seq"};  ///< "seq" or "tour"
  std::string mode{"exact"};  ///< "exact" or "heuristic"
  bool certified{true};
  double rho{1.0};
  PlanResult plan;
};

inline std::string bound_label(bool certified)
{
  return certified ? "certified lower bound" : "heuristic relaxation value, not a lower bound";
}

namespace detail
{

inline nlohmann::json segments_to_json(const RsPath & p)
{
  nlohmann::json segs = nlohmann::json::array();
  for (const auto & s : p.segments) {
    const char * steer = s.steer == Steer::Left ? "L" : (s.steer == Steer::Right ? "R" : "S");
    segs.push_back({{"steer", steer}, {"gear", s.gear == Gear::Forward ? "+" : "-"},
        {"magnitude", s.magnitude}});
  }
  return segs;
}

inline RsPath segments_from_json(const nlohmann::json & v, double rho, const std::string & path)
{
  if (!v.is_array()) {
    throw ParseError(path + ": expected an array");
  }
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const auto & steer = field(v[i], "steer", p);
    const auto & gear = field(v[i], "gear", p);
    if (!steer.is_string() || !gear.is_string()) {
      throw ParseError(p + ": steer and gear must be strings");
    }
    Segment s;
    const std::string st = steer.get<std::string>();
    const std::string gr = gear.get<std::string>();
    if (st == "L") {
      s.steer = Steer::Left;
    } else if (st == "R") {
      s.steer = Steer::Right;
    } else if (st == "S") {
      s.steer = Steer::Straight;
    } else {
      throw ParseError(p + ".steer: expected L, R or S");
    }
    if (gr == "+") {
      s.gear = Gear::Forward;
    } else if (gr == "-") {
      s.gear = Gear::Backward;
    } else {
      throw ParseError(p + ".gear: expected + or -");
    }
    s.magnitude = number_field(v[i], "magnitude", p);
    segs.push_back(s);
  }
  try {
    return make_path(std::move(segs), rho);
  } catch (const InvalidArgument & e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace detail

/// \brief Result document as JSON. Every leg lists its start and end pose and its word,
/// so the feasible path can be re-integrated from the document alone.
inline nlohmann::json result_to_json(const ResultDocument & doc, const Instance & inst)
{
  const PlanResult & r = doc.plan;
  const auto idx = sequence_indices(inst, r.sequence);
  const std::size_t n = idx.size();
  nlohmann::json headings = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    headings.push_back({{"id", r.sequence[i]}, {"theta", r.chosen_headings[i]}});
  }
  auto pose = [&](std::size_t t, double th) {
      const Waypoint & w = inst.waypoints[idx[t % n]];
      return nlohmann::json{{"x", w.x}, {"y", w.y}, {"theta", th}};
    };
  nlohmann::json lb_legs = nlohmann::json::array();
  for (std::size_t t = 0; t < r.lb_legs.size(); ++t) {
    const IntervalSolution & s = r.lb_legs[t];
    lb_legs.push_back({
        {"from", r.sequence[t]}, {"to", r.sequence[(t + 1) % n]},
        {"sector_from", r.lb_sectors[t]}, {"sector_to", r.lb_sectors[(t + 1) % n]},
        {"start", pose(t, s.theta_dep)}, {"end", pose(t + 1, s.theta_arr)},
        {"length", s.length}, {"case", case_name(s.case_tag)}, {"word", word_string(s.path)},
        {"segments", detail::segments_to_json(s.path)}});
  }
  nlohmann::json legs = nlohmann::json::array();
  for (std::size_t t = 0; t < r.feasible_legs.size(); ++t) {
    const RsPath & p = r.feasible_legs[t];
    legs.push_back({
        {"from", r.sequence[t]}, {"to", r.sequence[(t + 1) % n]},
        {"start", pose(t, r.chosen_headings[t])},
        {"end", pose(t + 1, r.chosen_headings[(t + 1) % n])},
        {"length", p.length}, {"word", word_string(p)},
        {"segments", detail::segments_to_json(p)}});
  }
  return {
    {"schema_version", kResultSchemaVersion},
    {"variant", doc.variant},
    {"mode", doc.mode},
    {"certified", doc.certified},
    {"closed", r.closed},
    {"k", r.k},
    {"rho", doc.rho},
    {"sequence", r.sequence},
    {"lower_bound", r.lower_bound},
    {"lower_bound_label", bound_label(doc.certified)},
    {"feasible_length", r.feasible_length},
    {"deviation_pct", r.deviation_pct},
    {"theoretical_gap", r.theoretical_gap},
    {"theoretical_deviation_pct", r.theoretical_deviation_pct},
    {"headings", headings},
    {"lower_bound_legs", lb_legs},
    {"feasible_legs", legs}};
}

inline std::string result_to_string(const ResultDocument & doc, const Instance & inst)
{
  return result_to_json(doc, inst).dump(2) + "\n";
}

/// \brief Parse a result document; fills the fields needed to render and audit it.
inline ResultDocument result_from_string(const std::string & text)
{
  const nlohmann::json v = detail::parse_document(text, "result");
  const int version = detail::integer_field(v, "schema_version", "result");
  if (version != kResultSchemaVersion) {
    throw VersionError("result: unsupported schema_version " + std::to_string(version));
  }
  ResultDocument doc;
  auto str = [&](const char * key) {
      const auto & f = detail::field(v, key, "result");
      if (!f.is_string()) {
        throw ParseError(std::string("result.") + key + ": expected a string");
      }
      return f.get<std::string>();
    };
  doc.variant = str("variant");
  doc.mode = str("mode");
  const auto & cert = detail::field(v, "certified", "result");
  const auto & closed = detail::field(v, "closed", "result");
  if (!cert.is_boolean() || !closed.is_boolean()) {
    throw ParseError("result: certified and closed must be booleans");
  }
  doc.certified = cert.get<bool>();
  doc.rho = detail::number_field(v, "rho", "result");
  if (!(doc.rho > 0.0)) {
    throw ParseError("result.rho: must be positive");
  }
  PlanResult & r = doc.plan;
  r.closed = closed.get<bool>();
  r.k = detail::integer_field(v, "k", "result");
  r.lower_bound = detail::number_field(v, "lower_bound", "result");
  r.feasible_length = detail::number_field(v, "feasible_length", "result");
  r.deviation_pct = detail::number_field(v, "deviation_pct", "result");
  r.theoretical_gap = detail::number_field(v, "theoretical_gap", "result");
  r.theoretical_deviation_pct = detail::number_field(v, "theoretical_deviation_pct", "result");
  const auto & seq = detail::field(v, "sequence", "result");
  const auto & heads = detail::field(v, "headings", "result");
  if (!seq.is_array() || !heads.is_array() || seq.size() != heads.size()) {
    throw ParseError("result: sequence and headings must be arrays of equal length");
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq[i].is_number_integer()) {
      throw ParseError("result.sequence[" + std::to_string(i) + "]: expected an integer");
    }
    r.sequence.push_back(seq[i].get<int>());
    r.chosen_headings.push_back(
      detail::number_field(heads[i], "theta", "result.headings[" + std::to_string(i) + "]"));
  }
  const auto & lb = detail::field(v, "lower_bound_legs", "result");
  const auto & fe = detail::field(v, "feasible_legs", "result");
  if (!lb.is_array() || !fe.is_array()) {
    throw ParseError("result: legs must be arrays");
  }
  for (std::size_t t = 0; t < lb.size(); ++t) {
    const std::string p = "result.lower_bound_legs[" + std::to_string(t) + "]";
    IntervalSolution s;
    s.theta_dep = detail::number_field(detail::field(lb[t], "start", p), "theta", p + ".start");
    s.theta_arr = detail::number_field(detail::field(lb[t], "end", p), "theta", p + ".end");
    s.path = detail::segments_from_json(detail::field(lb[t], "segments", p), doc.rho, p + ".segments");
    s.length = s.path.length;
    const auto & tag = detail::field(lb[t], "case", p);
    const auto known = std::find_if(kAllCases.begin(), kAllCases.end(), [&](EndpointCase c) {
        return tag.is_string() && tag.get<std::string>() == case_name(c);
      });
    if (known == kAllCases.end()) {
      throw ParseError(p + ".case: unknown endpoint case");
    }
    s.case_tag = *known;
    r.lb_legs.push_back(std::move(s));
    r.lb_sectors.push_back(detail::integer_field(lb[t], "sector_from", p));
    if (!r.closed && t + 1 == lb.size()) {
      r.lb_sectors.push_back(detail::integer_field(lb[t], "sector_to", p));
    }
  }
  for (std::size_t t = 0; t < fe.size(); ++t) {
    const std::string p = "result.feasible_legs[" + std::to_string(t) + "]";
    r.feasible_legs.push_back(
      detail::segments_from_json(detail::field(fe[t], "segments", p), doc.rho, p + ".segments"));
  }
  return doc;
}

}  // namespace rsfov

#endif  // RSFOV__RESULT_IO_HPP_
