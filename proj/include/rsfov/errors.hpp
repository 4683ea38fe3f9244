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

#ifndef RSFOV__ERRORS_HPP_
#define RSFOV__ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rsfov
{

/// \brief Precondition violated by the caller (bad radius, bad angle, bad k, ...).
class InvalidArgument : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// \brief A bounded search ran out of states before reaching its goal.
class SearchExhausted : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// \brief Exact solver refused an instance above its size limit.
class SizeLimitExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// \brief Malformed instance or result document.
class ParseError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// \brief Document carries a schema version this build does not understand.
class VersionError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// \brief A certified bound relation failed at runtime. Always a bug.
class InvariantViolation : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

}  // namespace rsfov

#endif  // RSFOV__ERRORS_HPP_
