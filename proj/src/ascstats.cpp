/**************************************************************************
 * ascstats.cpp
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

#include "psca/ascstats.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "psca/psca.hpp"

namespace psca {

namespace {

constexpr std::uint32_t kNoLine = 0xffffffffu;
constexpr std::uint64_t kMaxPlaneOrder = 1024;

std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

LabeledLineSet::LabeledLineSet(std::uint64_t q, std::vector<std::vector<std::uint32_t>> lines)
    : q_(q), r_(q * q + q + 1), lines_(std::move(lines)) {
    if (q < 2 || q > kMaxPlaneOrder) throw std::invalid_argument("plane order out of range");
    if (lines_.size() != r_) {
        throw std::invalid_argument("expected " + std::to_string(r_) + " lines, got " + std::to_string(lines_.size()));
    }
    for (auto& line : lines_) {
        if (line.size() != q + 1) throw std::invalid_argument("line of wrong size");
        std::sort(line.begin(), line.end());
        if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
            throw std::invalid_argument("line repeats a label");
        }
        if (line.back() >= r_) throw std::invalid_argument("label out of range");
    }
    std::sort(lines_.begin(), lines_.end());
    line_of_pair_.assign(r_ * r_, kNoLine);
    for (std::uint32_t k = 0; k < lines_.size(); ++k) {
        const auto& line = lines_[k];
        for (std::size_t i = 0; i < line.size(); ++i) {
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                auto& a = line_of_pair_[line[i] * r_ + line[j]];
                if (a != kNoLine) {
                    throw std::invalid_argument("labels " + std::to_string(line[i]) + " and " +
                                                std::to_string(line[j]) + " share two lines");
                }
                a = k;
                line_of_pair_[line[j] * r_ + line[i]] = k;
            }
        }
    }
    for (std::uint64_t a = 0; a < r_; ++a) {
        for (std::uint64_t b = a + 1; b < r_; ++b) {
            if (line_of_pair_[a * r_ + b] == kNoLine) {
                throw std::invalid_argument("labels " + std::to_string(a) + " and " + std::to_string(b) +
                                            " share no line");
            }
        }
    }
}

LabeledLineSet LabeledLineSet::from_labeling(const Geometry& g, const Labeling& psi) {
    if (g.dimension() != 2) throw GeometryError("lineset needs a projective plane");
    std::vector<std::vector<std::uint32_t>> lines;
    lines.reserve(g.lines().size());
    for (const auto& line : g.lines()) {
        std::vector<std::uint32_t> labels;
        labels.reserve(line.size());
        for (auto p : line) labels.push_back(psi.label(p));
        lines.push_back(std::move(labels));
    }
    return LabeledLineSet(g.order(), std::move(lines));
}

LabeledLineSet LabeledLineSet::from_difference_set(const DifferenceSet& d) {
    return LabeledLineSet(d.q, translate_lines(d));
}

std::uint32_t LabeledLineSet::line_through(std::uint32_t a, std::uint32_t b) const {
    if (a == b || a >= r_ || b >= r_) throw std::invalid_argument("line_through needs two distinct labels");
    return line_of_pair_[a * r_ + b];
}

bool LabeledLineSet::translate_generated() const {
    const std::set<std::vector<std::uint32_t>> all(lines_.begin(), lines_.end());
    std::vector<std::uint32_t> shifted;
    for (const auto& line : lines_) {
        shifted.clear();
        for (auto x : line) shifted.push_back(static_cast<std::uint32_t>((x + 1) % r_));
        std::sort(shifted.begin(), shifted.end());
        if (!all.contains(shifted)) return false;
    }
    return true;
}

std::string_view to_string(SequenceClass c) {
    switch (c) {
        case SequenceClass::Frame: return "frame";
        case SequenceClass::T1: return "T1";
        case SequenceClass::T2: return "T2";
        case SequenceClass::T3: return "T3";
        case SequenceClass::T4: return "T4";
        case SequenceClass::Collinear4: return "collinear4";
    }
    return "?";
}

SequenceClass classify(std::span<const std::uint32_t> s, const LabeledLineSet& lines) {
    if (s.size() != 4) throw std::invalid_argument("classify takes 4 labels");
    for (std::size_t i = 0; i < 4; ++i) {
        if (s[i] >= lines.r()) throw std::invalid_argument("label out of range");
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (s[i] == s[j]) throw std::invalid_argument("repeated label");
        }
    }
    // Two collinear triples share a pair, hence a line, so all four are collinear.
    int off = -1;
    int collinear = 0;
    for (int i = 0; i < 4; ++i) {
        std::uint32_t rest[3];
        for (int j = 0, k = 0; j < 4; ++j) {
            if (j != i) rest[k++] = s[j];
        }
        if (lines.line_through(rest[0], rest[1]) == lines.line_through(rest[0], rest[2])) {
            ++collinear;
            off = i;
        }
    }
    if (collinear == 0) return SequenceClass::Frame;
    if (collinear > 1) return SequenceClass::Collinear4;
    return static_cast<SequenceClass>(off + 1);
}

std::int64_t AscentSums::component(SequenceClass c) const {
    switch (c) {
        case SequenceClass::T1: return e1;
        case SequenceClass::T2: return e2;
        case SequenceClass::T3: return e3;
        case SequenceClass::T4: return e4;
        default: throw std::invalid_argument("ascent sums exist only for T1..T4");
    }
}

AscentSums ascent_sums(const LabeledLineSet& lines) {
    const auto q = static_cast<std::int64_t>(lines.q());
    const auto r = static_cast<std::int64_t>(lines.r());
    AscentSums out;
    std::int64_t e2_raw = 0;
    std::int64_t e3_raw = 0;
    for (const auto& line : lines.lines()) {
        for (std::int64_t i = 0; i <= q; ++i) {
            const std::int64_t below = static_cast<std::int64_t>(line[i]) - i;
            out.e1 += choose2(q - i) * below;
            out.e2 += (i * (q - i) - choose2(q - i)) * below;
            out.e3 += (choose2(i) - i * (q - i)) * below;
            out.e4 += choose2(i) * (q * q - below);
            for (std::int64_t j = i + 1; j <= q; ++j) {
                const std::int64_t between = (static_cast<std::int64_t>(line[j]) - j) - below;
                e2_raw += (q - j) * between;
                e3_raw += i * between;
            }
        }
    }
    if (e2_raw != out.e2 || e3_raw != out.e3) {
        throw std::logic_error("collapsed ascent sums disagree with the double sums");
    }
    out.e5 = r * q * q * q * (q + 1) * (q - 1) / 6;
    return out;
}

IdentityCheck linesum_check(const LabeledLineSet& lines) {
    const auto q = static_cast<std::int64_t>(lines.q());
    IdentityCheck out;
    for (const auto& line : lines.lines()) {
        for (std::int64_t i = 0; i <= q; ++i) out.lhs += i * static_cast<std::int64_t>(line[i]);
    }
    out.rhs = (q * q + q) * (q * q + q + 1) * (2 * q * q + 2 * q + 1) / 6;
    return out;
}

IdentityCheck diffset_identity_check(const DifferenceSet& d, std::uint32_t i) {
    if (i > d.q) throw std::invalid_argument("index beyond q");
    const auto r = static_cast<std::int64_t>(d.r);
    const auto gap = [&](std::int64_t hi, std::int64_t lo) {
        const std::int64_t x = static_cast<std::int64_t>(cyclic_index(d, hi)) - cyclic_index(d, lo);
        return ((x % r) + r) % r;
    };
    const auto ii = static_cast<std::int64_t>(i);
    IdentityCheck out;
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(d.q); ++k) {
        out.lhs += gap(k + ii, k) * gap(k, k - 1);
        out.rhs += gap(k + 1, k) * gap(k, k - ii);
    }
    return out;
}

IdentityCheck lineflip_check(const LabeledLineSet& lines, std::uint32_t i) {
    if (i > lines.q()) throw std::invalid_argument("index beyond q");
    if (!lines.translate_generated()) throw std::invalid_argument("lineset is not generated by translation");
    const auto q = static_cast<std::int64_t>(lines.q());
    IdentityCheck out;
    for (const auto& line : lines.lines()) {
        out.lhs += q * q + q - static_cast<std::int64_t>(line[lines.q() - i]);
        out.rhs += line[i];
    }
    return out;
}

std::vector<std::uint32_t> representative(SequenceClass c, const LabeledLineSet& lines) {
    const auto& l0 = lines.lines().front();
    std::uint32_t off = 0;
    while (std::binary_search(l0.begin(), l0.end(), off)) ++off;
    switch (c) {
        case SequenceClass::Collinear4:
            if (l0.size() < 4) throw std::invalid_argument("lines have fewer than 4 points");
            return {l0[0], l0[1], l0[2], l0[3]};
        case SequenceClass::Frame: {
            const std::uint32_t a = l0[0], b = l0[1];
            for (std::uint32_t d = 0; d < lines.r(); ++d) {
                std::vector<std::uint32_t> s{a, b, off, d};
                if (d == a || d == b || d == off) continue;
                if (classify(s, lines) == SequenceClass::Frame) return s;
            }
            throw std::logic_error("no frame found");
        }
        default: {
            std::vector<std::uint32_t> s{l0[0], l0[1], l0[2]};
            const auto pos = static_cast<std::size_t>(c) - 1;
            s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), off);
            return s;
        }
    }
}

OrbitComparison asc_equals_orbit_count(const LabeledLineSet& lines, SequenceClass c, const GroupRep& rep,
                                       unsigned threads) {
    if (c == SequenceClass::Collinear4) throw std::invalid_argument("no prediction for collinear sequences");
    OrbitComparison out;
    out.sequence = representative(c, lines);
    out.predicted = c == SequenceClass::Frame ? rep.order() / 24
                                              : static_cast<std::uint64_t>(ascent_sums(lines).component(c));
    out.observed = orbit_asc_stab(out.sequence, rep, threads);
    return out;
}

std::map<SequenceClass, std::uint64_t> class_census(const LabeledLineSet& lines) {
    // Per 4-subset: each of its 24 orderings puts the off-line point (if
    // any) at each position exactly 6 times.
    std::map<SequenceClass, std::uint64_t> out;
    for (auto c : kSequenceClasses) out[c] = 0;
    std::vector<std::uint32_t> s(4);
    for_each_combination(static_cast<std::uint32_t>(lines.r()), 4, [&](std::span<const std::uint32_t> comb) {
        std::copy(comb.begin(), comb.end(), s.begin());
        const auto c = classify(s, lines);
        if (c == SequenceClass::Frame || c == SequenceClass::Collinear4) {
            out[c] += 24;
        } else {
            for (auto t : {SequenceClass::T1, SequenceClass::T2, SequenceClass::T3, SequenceClass::T4}) out[t] += 6;
        }
    });
    return out;
}

bool Thm2Report::frames_and_t_exact() const {
    for (const auto& [cls, hist] : class_histograms) {
        if (cls == SequenceClass::Collinear4) continue;
        if (hist.size() != 1 || hist.begin()->first != lambda) return false;
    }
    return true;
}

bool Thm2Report::fraction_exceeds_bounds() const {
    const BigInt p = perfect_count, n = total, qq = q;
    return p * (qq + 1) > qq * n && p * qq > (qq - 1) * n;
}

Thm2Report coverage_histogram_thm2(std::uint64_t q, const Thm2Options& opts, const std::optional<DifferenceSet>& user_set) {
    if (!is_prime_power(q)) throw std::invalid_argument("q is not a prime power");
    const BigInt order = pgl_order(2, q);
    if (order > opts.max_group_size) {
        throw GuardExceeded("|PGL(3," + std::to_string(q) + ")| = " + order.str() + " exceeds the limit " +
                            std::to_string(opts.max_group_size));
    }
    auto geometry = std::make_shared<const Geometry>(Geometry::build(2, q));
    const SingerLabeling singer =
        user_set ? labeling_from_difference_set(*geometry, *user_set) : labeling_from_singer(*geometry);
    const GroupRep rep(geometry, singer.psi);
    const auto lines = LabeledLineSet::from_labeling(*geometry, singer.psi);

    Thm2Report out;
    out.q = q;
    out.r = lines.r();
    out.group_order = rep.order();
    out.lambda = out.group_order / 24;
    out.difference_set = singer.difference_set;
    out.sums = ascent_sums(lines);
    out.census = class_census(lines);
    out.bound = static_cast<double>(q) / static_cast<double>(q + 1);
    out.weaker_bound = 1.0 - 1.0 / static_cast<double>(q);

    const auto r = static_cast<std::uint32_t>(out.r);
    const PglEnumerator e(rep);
    const unsigned threads = effective_threads(opts.threads, e.chunk_count());
    std::vector<CoverageCounter> parts(threads, CoverageCounter(r, 4));
    parallel_for(e.chunk_count(), threads, [&](unsigned w, std::uint64_t chunk) {
        e.run_chunk(static_cast<std::uint32_t>(chunk), [&](const PglElement& el) { parts[w].add_row(el.images); });
    });
    for (unsigned i = 1; i < threads; ++i) parts[0].merge(parts[i]);
    const auto counts = parts[0].counts_by_rank();

    const SequenceRanker ranker(r, 4);
    for (std::uint64_t k = 0; k < counts.size(); ++k) {
        const auto s = ranker.unrank(k);
        ++out.histogram[counts[k]];
        ++out.class_histograms[classify(s, lines)][counts[k]];
    }
    out.total = counts.size();
    const auto it = out.histogram.find(out.lambda);
    out.perfect_count = it == out.histogram.end() ? 0 : it->second;
    out.perfect_fraction = static_cast<double>(out.perfect_count) / static_cast<double>(out.total);
    return out;
}

}  // namespace psca
