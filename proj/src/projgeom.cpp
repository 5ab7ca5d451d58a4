/**************************************************************************
 * projgeom.cpp
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

#include "psca/projgeom.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "psca/combinatorics.hpp"
#include "psca/linalg.hpp"

namespace psca {

Geometry Geometry::build(int n, std::uint64_t q) {
    if (n < 1) throw GeometryError("projective dimension must be at least 1");
    if (!is_prime_power(q)) throw GeometryError("q = " + std::to_string(q) + " is not a prime power");
    std::uint64_t vectors = 1;
    for (int k = 0; k <= n; ++k) {
        vectors *= q;
        if (vectors > kMaxVectors) throw GeometryError("PG(n, q) too large to tabulate");
    }

    Geometry g(n, field_of_order(q));
    const Field& f = g.field_;
    const std::size_t dim = static_cast<std::size_t>(n) + 1;

    std::vector<std::vector<FieldElement>> reps;
    for (std::uint32_t code = 1; code < vectors; ++code) {
        auto v = g.decode(code);
        const auto lead = std::find_if(v.begin(), v.end(), [](FieldElement e) { return e.value != 0; });
        if (*lead == f.one()) reps.push_back(std::move(v));
    }
    std::sort(reps.begin(), reps.end(), [&](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [&](FieldElement x, FieldElement y) {
                                                return f.ordinal(x) < f.ordinal(y);
                                            });
    });

    g.r_ = static_cast<std::uint32_t>(reps.size());
    g.coords_.reserve(g.r_ * dim);
    g.point_of_code_.assign(vectors, kNoPoint);
    std::vector<FieldElement> scaled(dim);
    for (PointIndex i = 0; i < g.r_; ++i) {
        g.coords_.insert(g.coords_.end(), reps[i].begin(), reps[i].end());
        for (std::uint32_t s = 1; s < q; ++s) {
            for (std::size_t k = 0; k < dim; ++k) scaled[k] = f.mul(FieldElement{s}, reps[i][k]);
            g.point_of_code_[g.vector_code(scaled)] = i;
        }
    }

    if (n == 2) {
        // Each line is the zero set of a linear form; forms up to scalars are
        // again indexed by the points.
        for (PointIndex form = 0; form < g.r_; ++form) {
            const auto u = g.coords(form);
            std::vector<PointIndex> line;
            for (PointIndex p = 0; p < g.r_; ++p) {
                const auto c = g.coords(p);
                FieldElement dot = f.zero();
                for (std::size_t k = 0; k < dim; ++k) dot = f.add(dot, f.mul(u[k], c[k]));
                if (dot.value == 0) line.push_back(p);
            }
            g.lines_.push_back(std::move(line));
        }
        std::sort(g.lines_.begin(), g.lines_.end());
        g.line_of_pair_.assign(std::size_t{g.r_} * g.r_, std::numeric_limits<std::uint32_t>::max());
        for (std::uint32_t li = 0; li < g.lines_.size(); ++li) {
            for (PointIndex a : g.lines_[li]) {
                for (PointIndex b : g.lines_[li]) {
                    if (a != b) g.line_of_pair_[std::size_t{a} * g.r_ + b] = li;
                }
            }
        }
    }
    return g;
}

std::span<const FieldElement> Geometry::coords(PointIndex i) const {
    if (i >= r_) throw GeometryError("point index " + std::to_string(i) + " out of range");
    const std::size_t dim = static_cast<std::size_t>(n_) + 1;
    return {coords_.data() + i * dim, dim};
}

std::uint32_t Geometry::vector_code(std::span<const FieldElement> v) const {
    if (v.size() != static_cast<std::size_t>(n_) + 1) throw GeometryError("vector has wrong length");
    std::uint32_t code = 0;
    for (std::size_t k = v.size(); k-- > 0;) {
        if (!field_.contains(v[k])) throw GeometryError("coordinate outside the field");
        code = code * field_.order() + v[k].value;
    }
    return code;
}

std::vector<FieldElement> Geometry::decode(std::uint32_t code) const {
    std::vector<FieldElement> v(static_cast<std::size_t>(n_) + 1);
    for (auto& e : v) {
        e = FieldElement{code % field_.order()};
        code /= field_.order();
    }
    return v;
}

PointIndex Geometry::index_of(std::span<const FieldElement> v) const {
    const PointIndex p = point_of_code_[vector_code(v)];
    if (p == kNoPoint) throw GeometryError("the zero vector is not a point");
    return p;
}

const std::vector<std::vector<PointIndex>>& Geometry::lines() const {
    if (n_ != 2) throw GeometryError("line lists are only stored for planes");
    return lines_;
}

std::uint32_t Geometry::line_through(PointIndex a, PointIndex b) const {
    if (n_ != 2) throw GeometryError("line lists are only stored for planes");
    if (a >= r_ || b >= r_ || a == b) throw GeometryError("line_through needs two distinct points");
    return line_of_pair_[std::size_t{a} * r_ + b];
}

std::size_t rank_of(std::span<const PointIndex> points, const Geometry& g) {
    const std::size_t dim = static_cast<std::size_t>(g.dimension()) + 1;
    Matrix m(points.size(), dim);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto c = g.coords(points[i]);
        std::copy(c.begin(), c.end(), m.data.begin() + static_cast<std::ptrdiff_t>(i * dim));
    }
    return rank(std::move(m), g.field());
}

namespace {

void require_distinct(std::span<const PointIndex> s, const Geometry& g) {
    std::set<PointIndex> seen;
    for (PointIndex p : s) {
        if (p >= g.size()) throw GeometryError("point index " + std::to_string(p) + " out of range");
        if (!seen.insert(p).second) throw GeometryError("repeated point " + std::to_string(p));
    }
}

bool all_subsets_independent(std::span<const PointIndex> points, const Geometry& g) {
    const auto k = static_cast<std::uint32_t>(g.dimension()) + 1;
    bool ok = true;
    std::vector<PointIndex> subset(k);
    for_each_combination(static_cast<std::uint32_t>(points.size()), k, [&](const auto& idx) {
        if (!ok) return;
        for (std::uint32_t i = 0; i < k; ++i) subset[i] = points[idx[i]];
        ok = rank_of(subset, g) == k;
    });
    return ok;
}

}  // namespace

bool is_frame(std::span<const PointIndex> s, const Geometry& g) {
    require_distinct(s, g);
    if (s.size() != static_cast<std::size_t>(g.dimension()) + 2) {
        throw GeometryError("a frame has n+2 points");
    }
    return all_subsets_independent(s, g);
}

bool is_arc(std::span<const PointIndex> points, const Geometry& g) {
    require_distinct(points, g);
    return all_subsets_independent(points, g);
}

std::vector<PointIndex> rational_normal_curve_arc(const Geometry& g) {
    const int n = g.dimension();
    const Field& f = g.field();
    if (g.order() < static_cast<std::uint32_t>(n)) {
        throw GeometryError("a (q+1)-arc from the normal curve needs q >= n");
    }
    std::vector<PointIndex> arc;
    std::vector<FieldElement> v(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t ord = 0; ord < g.order(); ++ord) {
        const FieldElement t = f.from_ordinal(ord);
        FieldElement power = f.one();
        for (auto& e : v) {
            e = power;
            power = f.mul(power, t);
        }
        arc.push_back(g.index_of(v));
    }
    std::fill(v.begin(), v.end(), f.zero());
    v.back() = f.one();
    arc.push_back(g.index_of(v));
    if (!is_arc(arc, g)) throw std::logic_error("normal curve points failed the arc check");
    return arc;
}

}  // namespace psca
