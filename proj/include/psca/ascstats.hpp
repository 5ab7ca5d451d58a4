/**************************************************************************
 * ascstats.hpp
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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "psca/grp.hpp"
#include "psca/singer.hpp"

namespace psca {

/// Lines of a labeled projective plane, each as sorted labels.
class LabeledLineSet {
public:
    /// Validates: r = q^2+q+1 lines of q+1 distinct labels in [r], and every
    /// pair of labels on exactly one line. Lines are sorted internally and
    /// the list is kept in lexicographic order.
    LabeledLineSet(std::uint64_t q, std::vector<std::vector<std::uint32_t>> lines);

    static LabeledLineSet from_labeling(const Geometry& g, const Labeling& psi);
    static LabeledLineSet from_difference_set(const DifferenceSet& d);

    std::uint64_t q() const { return q_; }
    std::uint64_t r() const { return r_; }
    const std::vector<std::vector<std::uint32_t>>& lines() const { return lines_; }
    std::uint32_t line_through(std::uint32_t a, std::uint32_t b) const;

    /// True iff x -> x+1 mod r permutes the lines.
    bool translate_generated() const;

    friend bool operator==(const LabeledLineSet& a, const LabeledLineSet& b) {
        return a.q_ == b.q_ && a.lines_ == b.lines_;
    }

private:
    std::uint64_t q_;
    std::uint64_t r_;
    std::vector<std::vector<std::uint32_t>> lines_;
    std::vector<std::uint32_t> line_of_pair_;
};

enum class SequenceClass { Frame, T1, T2, T3, T4, Collinear4 };

inline constexpr std::array<SequenceClass, 6> kSequenceClasses = {
    SequenceClass::Frame, SequenceClass::T1, SequenceClass::T2,
    SequenceClass::T3,    SequenceClass::T4, SequenceClass::Collinear4};

std::string_view to_string(SequenceClass c);

/// Frame if no three entries are collinear, Collinear4 if all four are,
/// else T_i where i (1-based) is the position of the entry off the line
/// through the other three.
SequenceClass classify(std::span<const std::uint32_t> s, const LabeledLineSet& lines);

/// Ascent sums over the lineset. e1..e4 count |Asc(s)| for s in T_1..T_4;
/// e5 is the closed form r q^3 (q+1) (q-1) / 6 of their total.
struct AscentSums {
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;
    std::int64_t e3 = 0;
    std::int64_t e4 = 0;
    std::int64_t e5 = 0;

    std::int64_t component(SequenceClass c) const;
};

/// Evaluates e2 and e3 both as the double sums over pairs i < j and in
/// their collapsed single-sum form; throws std::logic_error on mismatch.
AscentSums ascent_sums(const LabeledLineSet& lines);

struct IdentityCheck {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;

    bool holds() const { return lhs == rhs; }
    explicit operator bool() const { return holds(); }
};

/// sum_l sum_i i l_i against (q^2+q)(q^2+q+1)(2q^2+2q+1)/6.
IdentityCheck linesum_check(const LabeledLineSet& lines);

/// sum_k (a_{k+i} - a_k)(a_k - a_{k-1}) against
/// sum_k (a_{k+1} - a_k)(a_k - a_{k-i}), k = 0..q, indices wrapped by
/// cyclic_index and every difference reduced mod r into [0, r-1].
IdentityCheck diffset_identity_check(const DifferenceSet& d, std::uint32_t i);

/// sum_l (q^2 + q - l_{q-i}) against sum_l l_i. The lineset must be
/// translate-generated.
IdentityCheck lineflip_check(const LabeledLineSet& lines, std::uint32_t i);

/// A sequence of the requested class, found by search.
std::vector<std::uint32_t> representative(SequenceClass c, const LabeledLineSet& lines);

struct OrbitComparison {
    std::vector<std::uint32_t> sequence;
    std::uint64_t predicted = 0;  // e_i for T_i, |G|/24 for frames
    OrbitStats observed;

    bool equal() const { return predicted == observed.asc_size; }
};

/// Compares the predicted |Asc(s)| for a representative of the class with
/// an orbit walk. The lineset must be the one of rep's labeling.
OrbitComparison asc_equals_orbit_count(const LabeledLineSet& lines, SequenceClass c, const GroupRep& rep,
                                       unsigned threads = 1);

/// Number of sequences of S_{r,4} in each class, by enumeration.
std::map<SequenceClass, std::uint64_t> class_census(const LabeledLineSet& lines);

struct Thm2Options {
    unsigned threads = 1;
    std::uint64_t max_group_size = 1'000'000'000;
};

struct Thm2Report {
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::uint64_t group_order = 0;
    std::uint64_t lambda = 0;  // group_order / 24
    DifferenceSet difference_set;
    AscentSums sums;
    std::map<SequenceClass, std::uint64_t> census;
    std::map<std::uint64_t, std::uint64_t> histogram;
    std::map<SequenceClass, std::map<std::uint64_t, std::uint64_t>> class_histograms;
    std::uint64_t perfect_count = 0;
    std::uint64_t total = 0;
    double perfect_fraction = 0;
    double bound = 0;          // q / (q+1)
    double weaker_bound = 0;   // 1 - 1/q

    /// Every frame and T_i sequence at lambda.
    bool frames_and_t_exact() const;
    /// perfect_count / total exceeds both q/(q+1) and 1 - 1/q (exact test).
    bool fraction_exceeds_bounds() const;
};

/// Streams PGL(3, q) under the Singer labeling (or the labeling of a given
/// difference set) and counts the coverage of every 4-sequence of labels.
Thm2Report coverage_histogram_thm2(std::uint64_t q, const Thm2Options& opts = {},
                                   const std::optional<DifferenceSet>& user_set = std::nullopt);

}  // namespace psca
