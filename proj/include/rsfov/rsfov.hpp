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

#ifndef RSFOV__RSFOV_HPP_
#define RSFOV__RSFOV_HPP_

#include "rsfov/bench.hpp"
#include "rsfov/errors.hpp"
#include "rsfov/geometry.hpp"
#include "rsfov/instance.hpp"
#include "rsfov/instance_io.hpp"
#include "rsfov/lattice_oracle.hpp"
#include "rsfov/parallel.hpp"
#include "rsfov/result_io.hpp"
#include "rsfov/rs_interval.hpp"
#include "rsfov/rs_point.hpp"
#include "rsfov/sequenced_planner.hpp"
#include "rsfov/svg.hpp"
#include "rsfov/tour_planner.hpp"

#endif  // RSFOV__RSFOV_HPP_
