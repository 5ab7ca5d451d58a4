/**************************************************************************
 * grp.cpp
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

#include "psca/grp.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace psca {

Labeling Labeling::identity(std::uint32_t r) {
    std::vector<std::uint32_t> v(r);
    std::iota(v.begin(), v.end(), 0u);
    return Labeling(std::move(v));
}

Labeling::Labeling(std::vector<std::uint32_t> label_of_point)
    : label_of_point_(std::move(label_of_point)), point_of_label_(label_of_point_.size(), kNoPoint) {
    const auto r = label_of_point_.size();
    for (std::size_t p = 0; p < r; ++p) {
        const auto l = label_of_point_[p];
        if (l >= r || point_of_label_[l] != kNoPoint) throw GroupError("labeling is not a bijection on [r]");
        point_of_label_[l] = static_cast<PointIndex>(p);
    }
}

BigInt pgl_order(int n, std::uint64_t q) {
    if (n < 1 || !is_prime_power(q)) throw GroupError("pgl_order needs n >= 1 and a prime power q");
    const BigInt qq = q;
    const BigInt top = boost::multiprecision::pow(qq, static_cast<unsigned>(n + 1));
    BigInt out = 1;
    for (int i = 0; i <= n; ++i) out *= top - boost::multiprecision::pow(qq, static_cast<unsigned>(i));
    return out / (qq - 1);
}

std::uint64_t pgl_order_u64(int n, std::uint64_t q) { return to_u64(pgl_order(n, q)); }

GroupRep::GroupRep(std::shared_ptr<const Geometry> geometry, Labeling labeling)
    : geometry_(std::move(geometry)), labeling_(std::move(labeling)) {
    if (!geometry_) throw GroupError("null geometry");
    if (labeling_.size() != geometry_->size()) throw GroupError("labeling size does not match the geometry");
}

GroupRep::GroupRep(std::shared_ptr<const Geometry> geometry)
    : GroupRep(geometry, Labeling::identity(geometry ? geometry->size() : 0)) {}

std::uint64_t GroupRep::order() const { return pgl_order_u64(geometry_->dimension(), geometry_->order()); }

PglEnumerator::PglEnumerator(const GroupRep& rep) : PglEnumerator(rep, [&] {
    std::vector<std::uint32_t> all(rep.geometry().size());
    std::iota(all.begin(), all.end(), 0u);
    return all;
}()) {}

PglEnumerator::PglEnumerator(const GroupRep& rep, std::vector<std::uint32_t> tracked_labels)
    : geometry_(&rep.geometry()),
      dim_(static_cast<std::size_t>(rep.geometry().dimension()) + 1),
      r_(rep.geometry().size()),
      vectors_(rep.geometry().vector_count()),
      tracked_labels_(std::move(tracked_labels)) {
    const Geometry& g = *geometry_;
    const Field& f = g.field();
    if (std::uint64_t{vectors_} * r_ > kMaxTable) throw GuardExceeded("geometry too large to enumerate PGL");
    for (auto l : tracked_labels_) {
        if (l >= r_) throw GroupError("tracked label out of range");
        tracked_points_.push_back(rep.labeling().point(l));
    }
    qpow_.assign(dim_, 1);
    for (std::size_t k = 1; k < dim_; ++k) qpow_[k] = qpow_[k - 1] * g.order();
    chunk_size_ = 1;
    for (std::size_t k = 1; k < dim_; ++k) chunk_size_ *= vectors_ - qpow_[k];

    dot_.assign(std::size_t{vectors_} * r_, 0);
    for (std::uint32_t v = 0; v < vectors_; ++v) {
        const auto row = g.decode(v);
        for (PointIndex p = 0; p < r_; ++p) {
            const auto c = g.coords(p);
            FieldElement acc = f.zero();
            for (std::size_t k = 0; k < dim_; ++k) acc = f.add(acc, f.mul(row[k], c[k]));
            dot_[std::size_t{v} * r_ + p] = acc.value;
        }
    }
    image_label_.assign(vectors_, kNoPoint);
    for (std::uint32_t v = 1; v < vectors_; ++v) image_label_[v] = rep.labeling().label(g.point_of_code(v));
}

void PglEnumerator::compute_annihilator(std::size_t depth, Work& w) const {
    Matrix m(depth, dim_);
    for (std::size_t i = 0; i < depth; ++i) {
        const auto row = geometry_->decode(w.rows[i]);
        std::copy(row.begin(), row.end(), m.data.begin() + static_cast<std::ptrdiff_t>(i * dim_));
    }
    auto& out = w.annihilator[depth];
    out.clear();
    for (const auto& v : nullspace(m, geometry_->field())) out.push_back(geometry_->index_of(v));
}

Matrix PglEnumerator::matrix_of(std::span<const std::uint32_t> rows) const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        const auto row = geometry_->decode(rows[i]);
        std::copy(row.begin(), row.end(), m.data.begin() + static_cast<std::ptrdiff_t>(i * dim_));
    }
    return m;
}

std::vector<Projectivity> materialize(const GroupRep& rep, std::uint64_t max_elements) {
    if (rep.order() > max_elements) throw GuardExceeded("group too large to materialize");
    PglEnumerator e(rep);
    std::vector<Projectivity> out;
    out.reserve(rep.order());
    e.for_each([&](const PglElement& el) {
        out.push_back(Projectivity{{el.images.begin(), el.images.end()}, e.matrix_of(el.rows)});
    });
    return out;
}

Projectivity projectivity_from_matrix(const Matrix& a, const GroupRep& rep) {
    return projectivity_from_matrix(a, rep.geometry(), rep.labeling());
}

Projectivity projectivity_from_matrix(const Matrix& a, const Geometry& g, const Labeling& psi) {
    const std::size_t dim = static_cast<std::size_t>(g.dimension()) + 1;
    if (a.rows != dim || a.cols != dim) throw GroupError("matrix has the wrong size");
    if (!inverse(a, g.field())) throw GroupError("matrix is singular");
    Projectivity out{std::vector<std::uint32_t>(g.size()), a};
    for (std::uint32_t label = 0; label < g.size(); ++label) {
        const auto c = g.coords(psi.point(label));
        const auto img = apply(a, {c.begin(), c.end()}, g.field());
        out.perm[label] = psi.label(g.index_of(img));
    }
    return out;
}

namespace {

// Matrix taking e_0, ..., e_n, (1, ..., 1) to the points of the frame.
Matrix frame_matrix(std::span<const PointIndex> s, const Geometry& g) {
    const Field& f = g.field();
    const std::size_t dim = static_cast<std::size_t>(g.dimension()) + 1;
    Matrix basis(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const auto c = g.coords(s[j]);
        for (std::size_t i = 0; i < dim; ++i) basis.at(i, j) = c[i];
    }
    const auto inv = inverse(basis, f);
    if (!inv) throw GroupError("first n+1 frame points are dependent");
    const auto last = g.coords(s[dim]);
    const auto scale = apply(*inv, {last.begin(), last.end()}, f);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) basis.at(i, j) = f.mul(basis.at(i, j), scale[j]);
    }
    return basis;
}

}  // namespace

Projectivity projectivity_from_frames(std::span<const PointIndex> s, std::span<const PointIndex> s_prime,
                                      const Geometry& g) {
    if (!is_frame(s, g) || !is_frame(s_prime, g)) throw GroupError("projectivity_from_frames needs two frames");
    const Field& f = g.field();
    const Matrix to_s = frame_matrix(s, g);
    const Matrix to_s_prime = frame_matrix(s_prime, g);
    const Matrix a = multiply(to_s_prime, *inverse(to_s, f), f);
    return projectivity_from_matrix(a, g, Labeling::identity(g.size()));
}

namespace {

std::uint64_t sequence_key(std::span<const std::uint32_t> s, std::uint64_t base) {
    std::uint64_t key = 0;
    for (auto x : s) key = key * base + x;
    return key;
}

bool ascending(std::span<const std::uint32_t> s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i - 1] >= s[i]) return false;
    }
    return true;
}

void check_sequence(std::span<const std::uint32_t> s, const GroupRep& rep) {
    std::unordered_set<std::uint32_t> seen;
    for (auto x : s) {
        if (x >= rep.geometry().size()) throw GroupError("sequence entry out of range");
        if (!seen.insert(x).second) throw GroupError("sequence entries must be distinct");
    }
    BigInt span = 1;
    for (std::size_t i = 0; i < s.size(); ++i) span *= rep.geometry().size();
    if (span > std::numeric_limits<std::uint64_t>::max()) throw GroupError("sequence too long to key");
}

}  // namespace

OrbitStats orbit_asc_stab(std::span<const std::uint32_t> s, const GroupRep& rep, unsigned threads,
                          std::uint64_t orbit_guard) {
    check_sequence(s, rep);
    const std::uint64_t base = rep.geometry().size();
    const std::uint64_t self = sequence_key(s, base);
    PglEnumerator e(rep, {s.begin(), s.end()});
    threads = effective_threads(threads, e.chunk_count());

    std::vector<std::unordered_set<std::uint64_t>> orbits(threads);
    std::vector<std::uint64_t> stab(threads, 0);
    std::vector<std::uint64_t> asc(threads, 0);
    parallel_for(e.chunk_count(), threads, [&](unsigned w, std::uint64_t chunk) {
        e.run_chunk(static_cast<std::uint32_t>(chunk), [&](const PglElement& el) {
            const std::uint64_t key = sequence_key(el.images, base);
            if (key == self) ++stab[w];
            if (orbits[w].insert(key).second) {
                if (orbits[w].size() > orbit_guard) throw GuardExceeded("orbit exceeds the configured guard");
            }
        });
    });
    for (unsigned w = 1; w < threads; ++w) orbits[0].merge(orbits[w]);

    OrbitStats out;
    out.orbit_size = orbits[0].size();
    out.stab_size = std::accumulate(stab.begin(), stab.end(), std::uint64_t{0});
    std::vector<std::uint32_t> seq(s.size());
    for (std::uint64_t key : orbits[0]) {
        for (std::size_t i = seq.size(); i-- > 0;) {
            seq[i] = static_cast<std::uint32_t>(key % base);
            key /= base;
        }
        if (ascending(seq)) ++out.asc_size;
    }
    return out;
}

std::uint64_t coverage_via_orbit(std::span<const std::uint32_t> s, const GroupRep& rep, unsigned threads,
                                 std::uint64_t orbit_guard) {
    const auto st = orbit_asc_stab(s, rep, threads, orbit_guard);
    return st.asc_size * st.stab_size;
}

std::uint64_t streamed_coverage(std::span<const std::uint32_t> s, const GroupRep& rep, unsigned threads) {
    check_sequence(s, rep);
    PglEnumerator e(rep, {s.begin(), s.end()});
    threads = effective_threads(threads, e.chunk_count());
    std::vector<std::uint64_t> count(threads, 0);
    parallel_for(e.chunk_count(), threads, [&](unsigned w, std::uint64_t chunk) {
        e.run_chunk(static_cast<std::uint32_t>(chunk), [&](const PglElement& el) {
            if (ascending(el.images)) ++count[w];
        });
    });
    return std::accumulate(count.begin(), count.end(), std::uint64_t{0});
}

}  // namespace psca
