/**************************************************************************
 * test_ascstats.cpp
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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "psca/ascstats.hpp"
#include "psca/psca.hpp"

using namespace psca;

namespace {

Labeling random_labeling(std::mt19937_64& rng, std::uint32_t r) {
    std::vector<std::uint32_t> l(r);
    std::iota(l.begin(), l.end(), 0u);
    std::shuffle(l.begin(), l.end(), rng);
    return Labeling(l);
}

LabeledLineSet random_lineset(std::mt19937_64& rng, std::uint64_t q) {
    const auto g = Geometry::build(2, q);
    return LabeledLineSet::from_labeling(g, random_labeling(rng, g.size()));
}

// Ascending T_i sequences counted one by one; the closed sums predict this.
std::array<std::int64_t, 4> ascending_t_counts(const LabeledLineSet& L) {
    std::array<std::int64_t, 4> out{};
    const auto r = static_cast<std::uint32_t>(L.r());
    for_each_combination(r, 4, [&](const std::vector<std::uint32_t>& s) {
        const auto c = classify(s, L);
        if (c != SequenceClass::Frame && c != SequenceClass::Collinear4) ++out[static_cast<int>(c) - 1];
    });
    return out;
}

}  // namespace

TEST(AscStats, LineSetValidation) {
    const auto d = singer_difference_set(2);
    auto lines = translate_lines(d);
    EXPECT_NO_THROW(LabeledLineSet(2, lines));
    auto dup = lines;
    dup[1] = dup[0];
    EXPECT_THROW(LabeledLineSet(2, dup), std::invalid_argument);
    auto short_line = lines;
    short_line[0].pop_back();
    EXPECT_THROW(LabeledLineSet(2, short_line), std::invalid_argument);
    auto missing = lines;
    missing.pop_back();
    EXPECT_THROW(LabeledLineSet(2, missing), std::invalid_argument);
    EXPECT_TRUE(LabeledLineSet::from_difference_set(d).translate_generated());
}

TEST(AscStats, ClassifyExamples) {
    const auto L = LabeledLineSet::from_difference_set(singer_difference_set(3));
    const auto& l = L.lines()[0];
    const std::vector<std::uint32_t> coll{l[0], l[1], l[2], l[3]};
    EXPECT_EQ(classify(coll, L), SequenceClass::Collinear4);
    std::uint32_t off = 0;
    while (std::binary_search(l.begin(), l.end(), off)) ++off;
    EXPECT_EQ(classify(std::vector<std::uint32_t>{off, l[0], l[1], l[2]}, L), SequenceClass::T1);
    EXPECT_EQ(classify(std::vector<std::uint32_t>{l[0], off, l[1], l[2]}, L), SequenceClass::T2);
    EXPECT_EQ(classify(std::vector<std::uint32_t>{l[0], l[1], off, l[2]}, L), SequenceClass::T3);
    EXPECT_EQ(classify(std::vector<std::uint32_t>{l[0], l[1], l[2], off}, L), SequenceClass::T4);
    for (auto c : kSequenceClasses) EXPECT_EQ(classify(representative(c, L), L), c);
    EXPECT_THROW(classify(std::vector<std::uint32_t>{0, 0, 1, 2}, L), std::invalid_argument);
}

TEST(AscStats, CensusQ3) {
    const auto L = LabeledLineSet::from_difference_set(singer_difference_set(3));
    const auto c = class_census(L);
    EXPECT_EQ(c.at(SequenceClass::Frame), 5616u);
    for (auto t : {SequenceClass::T1, SequenceClass::T2, SequenceClass::T3, SequenceClass::T4}) EXPECT_EQ(c.at(t), 2808u);
    EXPECT_EQ(c.at(SequenceClass::Collinear4), 312u);
    // literal enumeration of ordered sequences
    const SequenceRanker ranker(13, 4);
    std::map<SequenceClass, std::uint64_t> brute;
    for (std::uint64_t k = 0; k < ranker.size(); ++k) ++brute[classify(ranker.unrank(k), L)];
    EXPECT_EQ(brute, c);
}

TEST(AscStats, CensusClosedForms) {
    std::mt19937_64 rng(4);
    for (std::uint64_t q : {2, 4, 5}) {
        const auto L = random_lineset(rng, q);
        const auto c = class_census(L);
        const std::uint64_t r = q * q + q + 1;
        const std::uint64_t ti = r * q * q * q * (q + 1) * (q - 1);
        EXPECT_EQ(c.at(SequenceClass::Frame), ti * (q - 1));
        EXPECT_EQ(c.at(SequenceClass::T3), ti);
        EXPECT_EQ(c.at(SequenceClass::Collinear4), r * (q + 1) * q * (q - 1) * (q - 2));
        std::uint64_t total = 0;
        for (const auto& [k, n] : c) total += n;
        EXPECT_EQ(total, r * (r - 1) * (r - 2) * (r - 3));
    }
}

TEST(AscStats, SingerSumsAreQuarters) {
    const auto s2 = ascent_sums(LabeledLineSet::from_difference_set(singer_difference_set(2)));
    EXPECT_EQ(s2.e5, 28);
    for (auto e : {s2.e1, s2.e2, s2.e3, s2.e4}) EXPECT_EQ(e, 7);
    const auto s3 = ascent_sums(LabeledLineSet::from_difference_set(singer_difference_set(3)));
    EXPECT_EQ(s3.e5, 468);
    for (auto e : {s3.e1, s3.e2, s3.e3, s3.e4}) EXPECT_EQ(e, 117);
    for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16}) {
        const auto s = ascent_sums(LabeledLineSet::from_difference_set(singer_difference_set(q)));
        const auto qi = static_cast<std::int64_t>(q);
        EXPECT_EQ(s.e5, (qi * qi + qi + 1) * qi * qi * qi * (qi + 1) * (qi - 1) / 6);
        EXPECT_EQ(4 * s.e1, s.e5) << q;
        EXPECT_EQ(s.e1, s.e2);
        EXPECT_EQ(s.e2, s.e3);
        EXPECT_EQ(s.e3, s.e4);
    }
}

TEST(AscStats, SumsCountAscendingSequencesForAnyLabeling) {
    std::mt19937_64 rng(17);
    for (std::uint64_t q : {2, 3, 4}) {
        for (int trial = 0; trial < 3; ++trial) {
            const auto L = random_lineset(rng, q);
            const auto s = ascent_sums(L);
            const auto brute = ascending_t_counts(L);
            EXPECT_EQ(s.e1, brute[0]);
            EXPECT_EQ(s.e2, brute[1]);
            EXPECT_EQ(s.e3, brute[2]);
            EXPECT_EQ(s.e4, brute[3]);
        }
    }
}

TEST(AscStats, HalvesAndLineSumForRandomLabelings) {
    std::mt19937_64 rng(23);
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto L = random_lineset(rng, q);
            const auto s = ascent_sums(L);
            EXPECT_EQ(s.e1 + s.e2 + s.e3 + s.e4, s.e5);
            EXPECT_EQ(2 * (s.e1 + s.e4), s.e5);
            EXPECT_EQ(2 * (s.e2 + s.e3), s.e5);
            EXPECT_TRUE(linesum_check(L));
        }
    }
    std::mt19937_64 rng3(1);
    EXPECT_EQ(ascent_sums(random_lineset(rng3, 3)).e5 / 2, 234);
}

TEST(AscStats, LineSumExamples) {
    const auto c2 = linesum_check(LabeledLineSet::from_difference_set(singer_difference_set(2)));
    EXPECT_EQ(c2.lhs, 91);
    EXPECT_EQ(c2.rhs, 91);
    const auto c3 = linesum_check(LabeledLineSet::from_difference_set(singer_difference_set(3)));
    EXPECT_EQ(c3.rhs, 650);
    EXPECT_TRUE(c3);
}

TEST(AscStats, DifferenceAndFlipIdentities) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        const auto d = singer_difference_set(q);
        const auto L = LabeledLineSet::from_difference_set(d);
        for (std::uint32_t i = 0; i <= q; ++i) {
            const auto a = diffset_identity_check(d, i);
            EXPECT_TRUE(a) << "q=" << q << " i=" << i << ": " << a.lhs << " vs " << a.rhs;
            const auto b = lineflip_check(L, i);
            EXPECT_TRUE(b) << "q=" << q << " i=" << i << ": " << b.lhs << " vs " << b.rhs;
        }
        EXPECT_EQ(diffset_identity_check(d, 0).lhs, 0);
        EXPECT_EQ(diffset_identity_check(d, 0).rhs, 0);
    }
}

TEST(AscStats, LineFlipRejectsNonTranslateLineSets) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const auto L = random_lineset(rng, 3);
        if (L.translate_generated()) continue;
        EXPECT_THROW(lineflip_check(L, 1), std::invalid_argument);
        return;
    }
    FAIL() << "every random lineset was translate-generated";
}

TEST(AscStats, PredictedAscentsMatchOrbitWalks) {
    for (std::uint64_t q : {2, 3}) {
        auto g = std::make_shared<const Geometry>(Geometry::build(2, q));
        const auto s = labeling_from_singer(*g);
        const GroupRep rep(g, s.psi);
        const auto L = LabeledLineSet::from_labeling(*g, s.psi);
        for (auto c : {SequenceClass::Frame, SequenceClass::T1, SequenceClass::T2, SequenceClass::T3, SequenceClass::T4}) {
            const auto cmp = asc_equals_orbit_count(L, c, rep);
            EXPECT_TRUE(cmp.equal()) << q << " " << to_string(c);
            EXPECT_EQ(cmp.observed.stab_size, c == SequenceClass::Frame ? 1u : q - 1);
        }
        EXPECT_THROW(asc_equals_orbit_count(L, SequenceClass::Collinear4, rep), std::invalid_argument);
    }
}

TEST(AscStats, SingerHistogramSmallPlanes) {
    const auto r2 = coverage_histogram_thm2(2);
    EXPECT_EQ(r2.lambda, 7u);
    EXPECT_EQ(r2.histogram, (std::map<std::uint64_t, std::uint64_t>{{7, 840}}));
    EXPECT_TRUE(r2.frames_and_t_exact());
    EXPECT_TRUE(r2.fraction_exceeds_bounds());

    const auto r3 = coverage_histogram_thm2(3, {2});
    EXPECT_EQ(r3.lambda, 234u);
    EXPECT_EQ(r3.total, 17160u);
    EXPECT_GE(r3.perfect_count, 16848u);
    EXPECT_TRUE(r3.frames_and_t_exact());
    EXPECT_TRUE(r3.fraction_exceeds_bounds());
    EXPECT_EQ(r3.census.at(SequenceClass::Frame), 5616u);
    EXPECT_EQ(r3.class_histograms.at(SequenceClass::Frame), (std::map<std::uint64_t, std::uint64_t>{{234, 5616}}));
    EXPECT_THROW(coverage_histogram_thm2(4, {1, 1000}), GuardExceeded);
}

TEST(AscStats, SingerHistogramMatchesOrbitCoverage) {
    // Per-sequence cross-check of the streamed counts on PG(2,2), and on a
    // sample for PG(2,3), against orbit counting (Asc times Stab).
    for (std::uint64_t q : {2, 3}) {
        auto g = std::make_shared<const Geometry>(Geometry::build(2, q));
        const auto s = labeling_from_singer(*g);
        const GroupRep rep(g, s.psi);
        const auto r = static_cast<std::uint32_t>(g->size());
        CoverageCounter counter(r, 4);
        PglEnumerator(rep).for_each([&](const PglElement& el) { counter.add_row(el.images); });
        const auto counts = counter.counts_by_rank();
        std::map<std::uint64_t, std::uint64_t> hist;
        for (auto c : counts) ++hist[c];
        EXPECT_EQ(hist, coverage_histogram_thm2(q).histogram);
        const SequenceRanker ranker(r, 4);
        const std::uint64_t step = q == 2 ? 1 : 97;
        for (std::uint64_t k = 0; k < ranker.size(); k += step) {
            ASSERT_EQ(coverage_via_orbit(ranker.unrank(k), rep), counts[k]) << k;
        }
    }
}

TEST(AscStats, SingerHistogramWithUserDifferenceSet) {
    const auto base = singer_difference_set(3);
    std::vector<std::int64_t> image;
    for (auto a : base.elems) image.push_back(-3 * static_cast<std::int64_t>(a));
    const auto d = validate_difference_set(3, image);
    const auto rep = coverage_histogram_thm2(3, {}, d);
    EXPECT_EQ(rep.difference_set, d);
    EXPECT_TRUE(rep.frames_and_t_exact());
    EXPECT_TRUE(rep.fraction_exceeds_bounds());
}
