/**************************************************************************
 * projgeom.hpp
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

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "psca/gf.hpp"

namespace psca {

using PointIndex = std::uint32_t;

inline constexpr PointIndex kNoPoint = std::numeric_limits<PointIndex>::max();

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// PG(n, q) with points in canonical order.
///
/// A point is stored by its normalized representative: the first nonzero
/// coordinate is 1. Points are numbered in lexicographic order of these
/// representatives, with field elements ordered by Field::ordinal.
/// Vectors of GF(q)^(n+1) are also addressed by an integer code, coordinate
/// k contributing value * q^k.
class Geometry {
public:
    static constexpr std::uint64_t kMaxVectors = std::uint64_t{1} << 22;

    static Geometry build(int n, std::uint64_t q);

    int dimension() const { return n_; }
    std::uint32_t order() const { return field_.order(); }
    std::uint32_t size() const { return r_; }
    const Field& field() const { return field_; }

    std::span<const FieldElement> coords(PointIndex i) const;

    /// Point spanned by a nonzero vector.
    PointIndex index_of(std::span<const FieldElement> v) const;

    std::uint32_t vector_count() const { return static_cast<std::uint32_t>(point_of_code_.size()); }
    std::uint32_t vector_code(std::span<const FieldElement> v) const;
    std::vector<FieldElement> decode(std::uint32_t code) const;
    /// kNoPoint for the zero vector.
    PointIndex point_of_code(std::uint32_t code) const { return point_of_code_[code]; }

    /// Lines of the plane as sorted point lists, in lexicographic order.
    /// Only available when n == 2.
    const std::vector<std::vector<PointIndex>>& lines() const;
    std::uint32_t line_through(PointIndex a, PointIndex b) const;

private:
    Geometry(int n, Field f) : n_(n), field_(std::move(f)) {}

    int n_;
    Field field_;
    std::uint32_t r_ = 0;
    std::vector<FieldElement> coords_;  // r * (n+1)
    std::vector<PointIndex> point_of_code_;
    std::vector<std::vector<PointIndex>> lines_;
    std::vector<std::uint32_t> line_of_pair_;  // r * r, n == 2 only
};

inline Geometry build_geometry(int n, std::uint64_t q) { return Geometry::build(n, q); }

/// Rank over GF(q) of the coordinate vectors of the given points.
std::size_t rank_of(std::span<const PointIndex> points, const Geometry& g);

/// Ordered (n+2)-tuple with no n+1 entries in a common hyperplane.
bool is_frame(std::span<const PointIndex> s, const Geometry& g);

/// No n+1 of the points lie in a common hyperplane.
bool is_arc(std::span<const PointIndex> points, const Geometry& g);

/// {(1, t, ..., t^n) : t in GF(q)} followed by (0, ..., 0, 1); the first q
/// points follow Field::ordinal order of t. Requires q >= n.
std::vector<PointIndex> rational_normal_curve_arc(const Geometry& g);

}  // namespace psca
