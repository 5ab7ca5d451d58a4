/**************************************************************************
 * grp.hpp
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
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "psca/combinatorics.hpp"
#include "psca/linalg.hpp"
#include "psca/parallel.hpp"
#include "psca/projgeom.hpp"

namespace psca {

class GroupError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bijection psi from point indices of a Geometry to labels [r].
class Labeling {
public:
    static Labeling identity(std::uint32_t r);

    /// label_of_point[p] is the label of point p; must be a bijection on [r].
    explicit Labeling(std::vector<std::uint32_t> label_of_point);

    std::uint32_t size() const { return static_cast<std::uint32_t>(label_of_point_.size()); }
    std::uint32_t label(PointIndex p) const { return label_of_point_.at(p); }
    PointIndex point(std::uint32_t label) const { return point_of_label_.at(label); }
    const std::vector<std::uint32_t>& labels() const { return label_of_point_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<std::uint32_t> label_of_point_;
    std::vector<PointIndex> point_of_label_;
};

/// A permutation of labels induced by an invertible matrix: perm[i] is the
/// image of label i.
struct Projectivity {
    std::vector<std::uint32_t> perm;
    std::optional<Matrix> matrix;
};

/// |PGL(n+1, q)| = prod_{i=0}^{n} (q^(n+1) - q^i) / (q - 1).
BigInt pgl_order(int n, std::uint64_t q);
std::uint64_t pgl_order_u64(int n, std::uint64_t q);

/// PGL(n+1, q) acting on the labels of a geometry.
class GroupRep {
public:
    GroupRep(std::shared_ptr<const Geometry> geometry, Labeling labeling);
    explicit GroupRep(std::shared_ptr<const Geometry> geometry);

    const Geometry& geometry() const { return *geometry_; }
    std::shared_ptr<const Geometry> geometry_ptr() const { return geometry_; }
    const Labeling& labeling() const { return labeling_; }
    std::uint64_t order() const;

private:
    std::shared_ptr<const Geometry> geometry_;
    Labeling labeling_;
};

/// Enumerated group element: images of the tracked labels, and the matrix
/// rows as vector codes (see Geometry::vector_code).
struct PglElement {
    std::span<const std::uint32_t> images;
    std::span<const std::uint32_t> rows;
};

/// Streams PGL(n+1, q) as invertible matrices whose first row is a
/// normalized vector (first nonzero entry 1), i.e. one representative per
/// scalar class. Only the images of a chosen list of labels are computed.
///
/// The stream splits into chunk_count() equal chunks, one per choice of the
/// first row. Chunks are independent and may run concurrently.
class PglEnumerator {
public:
    static constexpr std::uint64_t kMaxTable = std::uint64_t{1} << 25;

    /// Tracks every label, so images are full one-line permutations.
    explicit PglEnumerator(const GroupRep& rep);
    PglEnumerator(const GroupRep& rep, std::vector<std::uint32_t> tracked_labels);

    std::uint32_t chunk_count() const { return r_; }
    std::uint64_t chunk_size() const { return chunk_size_; }
    const std::vector<std::uint32_t>& tracked_labels() const { return tracked_labels_; }

    template <class Visit>
    void run_chunk(std::uint32_t chunk, Visit&& visit) const;

    /// Visits every element; returns the number visited.
    template <class Visit>
    std::uint64_t for_each(Visit&& visit) const {
        for (std::uint32_t c = 0; c < r_; ++c) run_chunk(c, visit);
        return std::uint64_t{r_} * chunk_size_;
    }

    Matrix matrix_of(std::span<const std::uint32_t> rows) const;

private:
    struct Work {
        std::vector<std::uint32_t> rows;
        std::vector<std::uint32_t> partial;  // (dim + 1) * tracked
        std::vector<std::uint32_t> images;
        std::vector<std::vector<PointIndex>> annihilator;
    };

    template <class Visit>
    void descend(std::size_t depth, Work& w, Visit& visit) const;
    void compute_annihilator(std::size_t depth, Work& w) const;

    const Geometry* geometry_;
    std::size_t dim_;
    std::uint32_t r_;
    std::uint32_t vectors_;
    std::uint64_t chunk_size_;
    std::vector<std::uint32_t> tracked_labels_;
    std::vector<PointIndex> tracked_points_;
    std::vector<std::uint32_t> qpow_;
    std::vector<std::uint32_t> dot_;        // vectors * r, dot_[v * r + p] = v . coords(p)
    std::vector<std::uint32_t> image_label_;  // vector code -> label of its point
};

template <class Visit>
void PglEnumerator::run_chunk(std::uint32_t chunk, Visit&& visit) const {
    const std::size_t t = tracked_points_.size();
    Work w;
    w.rows.assign(dim_, 0);
    w.partial.assign((dim_ + 1) * t, 0);
    w.images.assign(t, 0);
    w.annihilator.resize(dim_);
    w.rows[0] = geometry_->vector_code(geometry_->coords(chunk));
    const std::uint32_t* d = dot_.data() + std::size_t{w.rows[0]} * r_;
    for (std::size_t i = 0; i < t; ++i) w.partial[t + i] = d[tracked_points_[i]];
    descend(1, w, visit);
}

template <class Visit>
void PglEnumerator::descend(std::size_t depth, Work& w, Visit& visit) const {
    compute_annihilator(depth, w);
    const auto& ann = w.annihilator[depth];
    const std::size_t t = tracked_points_.size();
    const std::uint32_t scale = qpow_[depth];
    const std::uint32_t* in = w.partial.data() + depth * t;
    const bool leaf = depth + 1 == dim_;
    for (std::uint32_t v = 0; v < vectors_; ++v) {
        const std::uint32_t* d = dot_.data() + std::size_t{v} * r_;
        bool in_span = true;
        for (PointIndex a : ann) {
            if (d[a] != 0) {
                in_span = false;
                break;
            }
        }
        if (in_span) continue;
        w.rows[depth] = v;
        if (leaf) {
            for (std::size_t i = 0; i < t; ++i) {
                w.images[i] = image_label_[in[i] + d[tracked_points_[i]] * scale];
            }
            visit(PglElement{w.images, w.rows});
        } else {
            std::uint32_t* out = w.partial.data() + (depth + 1) * t;
            for (std::size_t i = 0; i < t; ++i) out[i] = in[i] + d[tracked_points_[i]] * scale;
            descend(depth + 1, w, visit);
        }
    }
}

/// Every element as a full permutation, in stream order. Refuses groups
/// larger than `max_elements`.
std::vector<Projectivity> materialize(const GroupRep& rep, std::uint64_t max_elements = 10'000'000);

Projectivity projectivity_from_matrix(const Matrix& a, const GroupRep& rep);
Projectivity projectivity_from_matrix(const Matrix& a, const Geometry& g, const Labeling& psi);

/// The unique projectivity taking frame s to frame s_prime entrywise, as a
/// permutation of point indices (identity labeling).
Projectivity projectivity_from_frames(std::span<const PointIndex> s, std::span<const PointIndex> s_prime,
                                      const Geometry& g);

struct OrbitStats {
    std::uint64_t orbit_size = 0;
    std::uint64_t stab_size = 0;
    std::uint64_t asc_size = 0;
};

/// Orbit, stabilizer and ascending-orbit sizes of a label sequence under
/// the group, by walking the whole stream.
OrbitStats orbit_asc_stab(std::span<const std::uint32_t> s, const GroupRep& rep, unsigned threads = 1,
                          std::uint64_t orbit_guard = 100'000'000);

/// |Asc(s)| * |Stab(s)|: the number of group elements covering s.
std::uint64_t coverage_via_orbit(std::span<const std::uint32_t> s, const GroupRep& rep, unsigned threads = 1,
                                 std::uint64_t orbit_guard = 100'000'000);

/// Number of group elements covering s, counted in one streaming pass.
/// g covers s iff g^-1 maps s to an ascending sequence, and inversion
/// permutes the group, so this counts elements h with h(s) ascending.
std::uint64_t streamed_coverage(std::span<const std::uint32_t> s, const GroupRep& rep, unsigned threads = 1);

}  // namespace psca
