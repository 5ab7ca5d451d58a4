/**************************************************************************
 * io.hpp
 *
 * Copyright 2026 The psca Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "psca/ascstats.hpp"
#include "psca/combinatorics.hpp"
#include "psca/projgeom.hpp"
#include "psca/singer.hpp"

namespace psca {

/// Integers above 2^53 are written as decimal strings.
nlohmann::json exact_integer(const BigInt& x);

/// {q, n, points: [[c_0, ..., c_n], ...], lines?: [[...], ...]}. A coordinate
/// is its discrete log, with 0 written as -1. Lines only for planes.
nlohmann::json geometry_json(const Geometry& g);

/// {q, r, D: [...], lines: [[...], ...]}
nlohmann::json singer_json(const DifferenceSet& d);

/// {q, r, group_order, lambda, e: [e1..e4], e5, census: {...},
///  histogram: {count: multiplicity}, class_histograms, perfect_count,
///  total, perfect_fraction, bound, weaker_bound, frames_and_t_exact}
nlohmann::json ascstats_json(const Thm2Report& report);

/// Reads a planar difference set: either {"q": .., "D": [..]} or a bare
/// list of integers (JSON array or whitespace separated), in which case q
/// must be supplied. The result is validated.
DifferenceSet parse_difference_set(const std::string& text, std::optional<std::uint64_t> q);

}  // namespace psca
