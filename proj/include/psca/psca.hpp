/**************************************************************************
 * psca.hpp
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
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "psca/combinatorics.hpp"
#include "psca/grp.hpp"

namespace psca {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PscaFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Multiset of permutations of [v] in one-line notation: entry i of a row
/// is pi(i). Rows are stored contiguously; duplicates are allowed.
class PermutationMultiset {
public:
    static constexpr std::uint64_t kMaxRows = std::uint64_t{1} << 40;

    explicit PermutationMultiset(std::uint32_t v = 0) : v_(v) {}

    static PermutationMultiset symmetric_group(std::uint32_t v);

    std::uint32_t v() const { return v_; }
    std::size_t size() const { return v_ == 0 ? 0 : data_.size() / v_; }
    bool empty() const { return size() == 0; }

    std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * v_, v_}; }

    /// Appends a row; throws PreconditionError unless it is a bijection on [v].
    void add(std::span<const std::uint32_t> row);
    void reserve(std::size_t rows) { data_.reserve(rows * v_); }
    void remove(std::size_t i);

    friend bool operator==(const PermutationMultiset&, const PermutationMultiset&) = default;

private:
    std::uint32_t v_;
    std::vector<std::uint32_t> data_;
};

/// True iff the symbols of s appear in perm in the given relative order.
bool covers(std::span<const std::uint32_t> perm, std::span<const std::uint32_t> s);

/// Lexicographic rank of S_{v,t}, the injective t-sequences over [v].
class SequenceRanker {
public:
    SequenceRanker(std::uint32_t v, std::uint32_t t);

    std::uint32_t v() const { return v_; }
    std::uint32_t t() const { return t_; }
    std::uint64_t size() const { return size_; }

    std::uint64_t rank(std::span<const std::uint32_t> s) const;
    std::vector<std::uint32_t> unrank(std::uint64_t index) const;

private:
    std::uint32_t v_;
    std::uint32_t t_;
    std::uint64_t size_;
    std::vector<std::uint64_t> weight_;  // weight_[i] = (v-i-1)_(t-i-1)
};

/// Exact per-sequence coverage counts of a stream of permutations.
///
/// Each permutation covers exactly one ordering of every t-subset of
/// symbols, namely the order in which they appear in its one-line form, so
/// adding a row costs C(v, t) increments.
class CoverageCounter {
public:
    static constexpr std::uint64_t kMaxDense = std::uint64_t{1} << 24;

    CoverageCounter(std::uint32_t v, std::uint32_t t);

    void add_row(std::span<const std::uint32_t> perm);
    void merge(const CoverageCounter& other);

    std::uint32_t v() const { return v_; }
    std::uint32_t t() const { return t_; }
    std::uint64_t rows() const { return rows_; }

    std::uint64_t count(std::span<const std::uint32_t> s) const;
    /// Counts indexed by SequenceRanker rank.
    std::vector<std::uint64_t> counts_by_rank() const;

private:
    void add_level(std::span<const std::uint32_t> perm, std::uint32_t level, std::uint32_t start,
                   std::uint64_t code);

    std::uint32_t v_;
    std::uint32_t t_;
    std::uint64_t rows_ = 0;
    std::vector<std::uint64_t> dense_;  // indexed by base-v code of the sequence
};

struct CoverageReport {
    std::uint32_t v = 0;
    std::uint32_t t = 0;
    std::uint64_t rows = 0;
    /// coverage count -> number of sequences in S_{v,t} with that count
    std::map<std::uint64_t, std::uint64_t> histogram;
    std::optional<std::uint64_t> lambda;
    /// count the report treats as expected when coverage is not uniform
    std::uint64_t expected = 0;
    /// deviant count -> sample sequences
    std::map<std::uint64_t, std::vector<std::vector<std::uint32_t>>> witnesses;

    std::uint64_t total() const;
};

CoverageReport report_from_counts(std::uint32_t v, std::uint32_t t, std::uint64_t rows,
                                  std::span<const std::uint64_t> counts_by_rank, std::size_t max_witnesses = 10);

CoverageReport coverage_report(const PermutationMultiset& x, std::uint32_t t, unsigned threads = 1,
                               std::size_t max_witnesses = 10);

struct PscaVerdict {
    std::optional<std::uint64_t> lambda;
    CoverageReport report;
    std::string problem;

    explicit operator bool() const { return lambda.has_value(); }
};

/// lambda iff every t-sequence is covered exactly lambda > 0 times and
/// |X| = t! lambda.
PscaVerdict verify_psca(const PermutationMultiset& x, std::uint32_t t, unsigned threads = 1);

/// Drops symbols j..v-1 from every row, keeping the order of the rest.
PermutationMultiset delete_symbols(const PermutationMultiset& x, std::uint32_t j);

/// Labeling that puts the normal-curve arc on labels 0..q (curve points in
/// field order, then (0, ..., 0, 1)) and the remaining points on q+1..r-1
/// in geometry order.
Labeling arc_first_labeling(const Geometry& g);

struct ConstructOptions {
    unsigned threads = 1;
    std::uint64_t max_rows = 10'000'000;
};

struct PscaConstruction {
    std::uint64_t q = 0;
    std::uint32_t t = 0;
    std::uint64_t group_order = 0;
    std::uint64_t lambda = 0;  // claimed |PGL| / t!
    std::vector<PointIndex> arc;
    PermutationMultiset rows;
};

/// Projectivity group of PG(t-2, q) under an arc-first labeling, restricted
/// to the q+1 arc symbols. Requires t >= 3 and q >= t-1.
PscaConstruction construct_psca(std::uint64_t q, std::uint32_t t, const ConstructOptions& opts = {});

/// Streaming form of construct_psca for groups too large to hold: calls
/// sink(row) once per group element, in a fixed order independent of the
/// thread count. Returns the number of rows.
///
/// The row emitted for element h lists the arc symbols in increasing order
/// of h(a), which is the restriction of h^-1 to the arc symbols; since
/// inversion permutes the group the rows form the same multiset.
std::uint64_t stream_psca(std::uint64_t q, std::uint32_t t, unsigned threads,
                          const std::function<void(std::span<const std::uint32_t>)>& sink);

struct UpperBound {
    std::uint64_t q_chosen = 0;
    BigInt constructive;
    std::uint64_t q_power_of_two = 0;
    BigInt closed_form;
};

/// Upper bounds on g(v, t) for v >= t >= 4: the construction with the least
/// admissible prime power, and floor((2v)^((t-1)^2) / (t! (2v-1))).
UpperBound g_upper_bound(std::uint64_t v, std::uint32_t t);

std::uint64_t least_prime_power_at_least(std::uint64_t x);

// Text format:
//   psca v=<v> t=<t> lambda=<lambda|?> count=<N>
// followed by N rows of v space-separated integers.
std::string psca_header(std::uint32_t v, std::uint32_t t, std::optional<std::uint64_t> lambda, std::uint64_t count);
void write_psca_row(std::ostream& os, std::span<const std::uint32_t> row);
void write_psca(std::ostream& os, const PermutationMultiset& x, std::uint32_t t,
                std::optional<std::uint64_t> lambda);

struct PscaFile {
    std::uint32_t t = 0;
    std::optional<std::uint64_t> lambda;
    PermutationMultiset rows;
};

PscaFile read_psca(std::istream& is);

}  // namespace psca
