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

#ifndef RSFOV__INSTANCE_IO_HPP_
#define RSFOV__INSTANCE_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rsfov/instance.hpp"

namespace rsfov
{

/// \brief Instance schema version written and accepted by this build.
inline constexpr int kInstanceSchemaVersion = 1;

namespace detail
{

/// \brief 1-based line and column of byte offset `pos` in `text`.
inline std::string line_column(const std::string & text, std::size_t pos)
{
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

/// \brief Parse `text` as JSON; syntax errors become ParseError with a location.
inline nlohmann::json parse_document(const std::string & text, const std::string & what)
{
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error & e) {
    const std::size_t pos = e.byte == 0 ? 0 : e.byte - 1;
    throw ParseError(what + ": malformed document at " + line_column(text, pos));
  }
}

inline const nlohmann::json & field(const nlohmann::json & obj, const char * key, const std::string & path)
{
  if (!obj.is_object()) {
    throw ParseError(path + ": expected an object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(path + "." + key + ": missing field");
  }
  return *it;
}

inline double number_field(const nlohmann::json & obj, const char * key, const std::string & path)
{
  const auto & v = field(obj, key, path);
  if (!v.is_number()) {
    throw ParseError(path + "." + key + ": expected a number");
  }
  return v.get<double>();
}

inline int integer_field(const nlohmann::json & obj, const char * key, const std::string & path)
{
  const auto & v = field(obj, key, path);
  if (!v.is_number_integer()) {
    throw ParseError(path + "." + key + ": expected an integer");
  }
  return v.get<int>();
}

inline std::string read_file(const std::string & file)
{
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw InvalidArgument("cannot open " + file);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string & file, const std::string & text)
{
  std::ofstream out(file, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) {
    throw InvalidArgument("cannot write " + file);
  }
}

}  // namespace detail

/// \brief Instance as a JSON value. Doubles use the shortest round-trip form.
inline nlohmann::json instance_to_json(const Instance & inst)
{
  nlohmann::json wps = nlohmann::json::array();
  for (const auto & w : inst.waypoints) {
    wps.push_back({
        {"id", w.id}, {"x", w.x}, {"y", w.y},
        {"theta_min", w.fov.theta_min()}, {"theta_max", w.fov.theta_max()}});
  }
  return {{"schema_version", kInstanceSchemaVersion}, {"rho", inst.rho}, {"waypoints", wps}};
}

/// \brief Throws VersionError on a foreign schema, ParseError on missing or mistyped
/// fields, InvalidArgument on values that violate the instance invariants.
inline Instance instance_from_json(const nlohmann::json & doc)
{
  const int version = detail::integer_field(doc, "schema_version", "instance");
  if (version != kInstanceSchemaVersion) {
    throw VersionError(
      "instance: unsupported schema_version " + std::to_string(version) + " (expected " +
      std::to_string(kInstanceSchemaVersion) + ")");
  }
  Instance inst;
  inst.rho = detail::number_field(doc, "rho", "instance");
  const auto & wps = detail::field(doc, "waypoints", "instance");
  if (!wps.is_array()) {
    throw ParseError("instance.waypoints: expected an array");
  }
  for (std::size_t i = 0; i < wps.size(); ++i) {
    const std::string path = "instance.waypoints[" + std::to_string(i) + "]";
    const auto & w = wps[i];
    const int id = detail::integer_field(w, "id", path);
    const double x = detail::number_field(w, "x", path);
    const double y = detail::number_field(w, "y", path);
    const double lo = detail::number_field(w, "theta_min", path);
    const double hi = detail::number_field(w, "theta_max", path);
    try {
      inst.waypoints.push_back(Waypoint{id, x, y, AngleInterval(lo, hi)});
    } catch (const InvalidArgument & e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  validate_instance(inst);
  return inst;
}

inline std::string instance_to_string(const Instance & inst)
{
  return instance_to_json(inst).dump(2) + "\n";
}

inline Instance instance_from_string(const std::string & text)
{
  return instance_from_json(detail::parse_document(text, "instance"));
}

inline void save_instance(const Instance & inst, const std::string & file)
{
  detail::write_file(file, instance_to_string(inst));
}

inline Instance load_instance(const std::string & file)
{
  return instance_from_string(detail::read_file(file));
}

}  // namespace rsfov

#endif  // RSFOV__INSTANCE_IO_HPP_
