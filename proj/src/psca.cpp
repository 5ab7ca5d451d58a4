/**************************************************************************
 * psca.cpp
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

#include "psca/psca.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace psca {

PermutationMultiset PermutationMultiset::symmetric_group(std::uint32_t v) {
    PermutationMultiset out(v);
    std::vector<std::uint32_t> perm(v);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        out.data_.insert(out.data_.end(), perm.begin(), perm.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void PermutationMultiset::add(std::span<const std::uint32_t> row) {
    if (row.size() != v_) throw PreconditionError("row length differs from the alphabet size");
    std::vector<bool> seen(v_, false);
    for (auto x : row) {
        if (x >= v_ || seen[x]) throw PreconditionError("row is not a permutation of [v]");
        seen[x] = true;
    }
    if (size() + 1 > kMaxRows) throw GuardExceeded("multiset exceeds 2^40 rows");
    data_.insert(data_.end(), row.begin(), row.end());
}

void PermutationMultiset::remove(std::size_t i) {
    if (i >= size()) throw std::out_of_range("row index out of range");
    const auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * v_);
    data_.erase(first, first + v_);
}

bool covers(std::span<const std::uint32_t> perm, std::span<const std::uint32_t> s) {
    std::vector<std::size_t> position(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size()) throw PreconditionError("not a permutation");
        position[perm[i]] = i;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= perm.size()) throw PreconditionError("symbol outside the alphabet");
        for (std::size_t j = 0; j < i; ++j) {
            if (s[i] == s[j]) throw PreconditionError("sequence symbols must be distinct");
        }
        if (i > 0 && position[s[i - 1]] >= position[s[i]]) return false;
    }
    return true;
}

SequenceRanker::SequenceRanker(std::uint32_t v, std::uint32_t t) : v_(v), t_(t) {
    if (t > v) throw PreconditionError("sequence length exceeds the alphabet size");
    size_ = falling_factorial(v, t);
    weight_.resize(t);
    for (std::uint32_t i = 0; i < t; ++i) weight_[i] = falling_factorial(v - i - 1, t - i - 1);
}

std::uint64_t SequenceRanker::rank(std::span<const std::uint32_t> s) const {
    if (s.size() != t_) throw PreconditionError("sequence has the wrong length");
    std::vector<bool> used(v_, false);
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < t_; ++i) {
        if (s[i] >= v_ || used[s[i]]) throw PreconditionError("not an injective sequence over [v]");
        std::uint64_t smaller = 0;
        for (std::uint32_t x = 0; x < s[i]; ++x) smaller += used[x] ? 0 : 1;
        out += smaller * weight_[i];
        used[s[i]] = true;
    }
    return out;
}

std::vector<std::uint32_t> SequenceRanker::unrank(std::uint64_t index) const {
    if (index >= size_) throw std::out_of_range("sequence rank out of range");
    std::vector<bool> used(v_, false);
    std::vector<std::uint32_t> out(t_);
    for (std::uint32_t i = 0; i < t_; ++i) {
        std::uint64_t skip = index / weight_[i];
        index %= weight_[i];
        std::uint32_t x = 0;
        while (used[x] || skip > 0) {
            if (!used[x]) --skip;
            ++x;
        }
        out[i] = x;
        used[x] = true;
    }
    return out;
}

CoverageCounter::CoverageCounter(std::uint32_t v, std::uint32_t t) : v_(v), t_(t) {
    if (t < 1 || t > v) throw PreconditionError("coverage strength must satisfy 1 <= t <= v");
    std::uint64_t dense = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        dense *= v;
        if (dense > kMaxDense) throw GuardExceeded("v^t too large for a dense coverage table");
    }
    dense_.assign(dense, 0);
}

void CoverageCounter::add_level(std::span<const std::uint32_t> perm, std::uint32_t level, std::uint32_t start,
                                std::uint64_t code) {
    if (level == t_) {
        ++dense_[code];
        return;
    }
    for (std::uint32_t i = start; i + (t_ - level) <= v_; ++i) add_level(perm, level + 1, i + 1, code * v_ + perm[i]);
}

void CoverageCounter::add_row(std::span<const std::uint32_t> perm) {
    if (perm.size() != v_) throw PreconditionError("row length differs from the alphabet size");
    ++rows_;
    if (t_ == 4) {
        const std::uint64_t v = v_;
        std::uint64_t* counts = dense_.data();
        for (std::uint32_t a = 0; a + 3 < v_; ++a) {
            const std::uint64_t ca = perm[a];
            for (std::uint32_t b = a + 1; b + 2 < v_; ++b) {
                const std::uint64_t cb = ca * v + perm[b];
                for (std::uint32_t c = b + 1; c + 1 < v_; ++c) {
                    std::uint64_t* base = counts + (cb * v + perm[c]) * v;
                    for (std::uint32_t d = c + 1; d < v_; ++d) ++base[perm[d]];
                }
            }
        }
        return;
    }
    add_level(perm, 0, 0, 0);
}

void CoverageCounter::merge(const CoverageCounter& other) {
    if (other.v_ != v_ || other.t_ != t_) throw PreconditionError("merging counters of different shape");
    for (std::size_t i = 0; i < dense_.size(); ++i) dense_[i] += other.dense_[i];
    rows_ += other.rows_;
}

std::uint64_t CoverageCounter::count(std::span<const std::uint32_t> s) const {
    SequenceRanker(v_, t_).rank(s);  // validates
    std::uint64_t code = 0;
    for (auto x : s) code = code * v_ + x;
    return dense_[code];
}

std::vector<std::uint64_t> CoverageCounter::counts_by_rank() const {
    // Injective sequences generated in lexicographic order have consecutive ranks.
    std::vector<std::uint64_t> out;
    out.reserve(falling_factorial(v_, t_));
    std::vector<bool> used(v_, false);
    auto walk = [&](auto&& self, std::uint32_t level, std::uint64_t code) -> void {
        if (level == t_) {
            out.push_back(dense_[code]);
            return;
        }
        for (std::uint32_t x = 0; x < v_; ++x) {
            if (used[x]) continue;
            used[x] = true;
            self(self, level + 1, code * v_ + x);
            used[x] = false;
        }
    };
    walk(walk, 0, 0);
    return out;
}

std::uint64_t CoverageReport::total() const {
    std::uint64_t n = 0;
    for (const auto& [count, mult] : histogram) n += mult;
    return n;
}

CoverageReport report_from_counts(std::uint32_t v, std::uint32_t t, std::uint64_t rows,
                                  std::span<const std::uint64_t> counts_by_rank, std::size_t max_witnesses) {
    CoverageReport rep;
    rep.v = v;
    rep.t = t;
    rep.rows = rows;
    for (auto c : counts_by_rank) ++rep.histogram[c];
    if (rep.histogram.size() == 1) {
        rep.lambda = rep.histogram.begin()->first;
        rep.expected = *rep.lambda;
        return rep;
    }
    const std::uint64_t tf = factorial(t);
    if (rows % tf == 0) {
        rep.expected = rows / tf;
    } else {
        std::uint64_t best = 0;
        for (const auto& [count, mult] : rep.histogram) {
            if (mult >= best) {
                best = mult;
                rep.expected = count;
            }
        }
    }
    const SequenceRanker ranker(v, t);
    for (std::uint64_t i = 0; i < counts_by_rank.size(); ++i) {
        const auto c = counts_by_rank[i];
        if (c == rep.expected) continue;
        auto& w = rep.witnesses[c];
        if (w.size() < max_witnesses) w.push_back(ranker.unrank(i));
    }
    return rep;
}

CoverageReport coverage_report(const PermutationMultiset& x, std::uint32_t t, unsigned threads,
                               std::size_t max_witnesses) {
    const std::uint32_t v = x.v();
    if (t < 1 || t > v) throw PreconditionError("coverage strength must satisfy 1 <= t <= v");
    const std::size_t n = x.size();
    threads = effective_threads(threads, n);
    std::vector<CoverageCounter> parts(threads, CoverageCounter(v, t));
    parallel_for(threads, threads, [&](unsigned, std::uint64_t part) {
        const std::size_t begin = n * part / threads;
        const std::size_t end = n * (part + 1) / threads;
        for (std::size_t i = begin; i < end; ++i) parts[part].add_row(x.row(i));
    });
    for (unsigned i = 1; i < threads; ++i) parts[0].merge(parts[i]);
    const auto counts = parts[0].counts_by_rank();
    return report_from_counts(v, t, n, counts, max_witnesses);
}

PscaVerdict verify_psca(const PermutationMultiset& x, std::uint32_t t, unsigned threads) {
    PscaVerdict out;
    out.report = coverage_report(x, t, threads);
    const auto& h = out.report.histogram;
    if (h.size() != 1) {
        out.problem = "coverage is not uniform: " + std::to_string(h.size()) + " distinct counts";
        return out;
    }
    const std::uint64_t lambda = h.begin()->first;
    if (lambda == 0) {
        out.problem = "no sequence is covered";
        return out;
    }
    if (x.size() != factorial(t) * lambda) {
        out.problem = "internal inconsistency: uniform coverage " + std::to_string(lambda) + " but " +
                      std::to_string(x.size()) + " rows";
        return out;
    }
    out.lambda = lambda;
    return out;
}

PermutationMultiset delete_symbols(const PermutationMultiset& x, std::uint32_t j) {
    if (j < 1 || j > x.v()) throw PreconditionError("delete_symbols needs 1 <= j <= v");
    PermutationMultiset out(j);
    out.reserve(x.size());
    std::vector<std::uint32_t> kept;
    kept.reserve(j);
    for (std::size_t i = 0; i < x.size(); ++i) {
        kept.clear();
        for (auto s : x.row(i)) {
            if (s < j) kept.push_back(s);
        }
        out.add(kept);
    }
    return out;
}

Labeling arc_first_labeling(const Geometry& g) {
    const auto arc = rational_normal_curve_arc(g);
    std::vector<std::uint32_t> label(g.size(), kNoPoint);
    for (std::uint32_t i = 0; i < arc.size(); ++i) label[arc[i]] = i;
    auto next = static_cast<std::uint32_t>(arc.size());
    for (PointIndex p = 0; p < g.size(); ++p) {
        if (label[p] == kNoPoint) label[p] = next++;
    }
    return Labeling(std::move(label));
}

namespace {

void check_construction(std::uint64_t q, std::uint32_t t) {
    if (t < 3) throw PreconditionError("construction needs strength t >= 3");
    if (!is_prime_power(q)) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
    if (q < t - 1) {
        throw PreconditionError("construction needs q >= n+1 = t-1 (q = " + std::to_string(q) +
                                ", t = " + std::to_string(t) + ")");
    }
}

}  // namespace

std::uint64_t stream_psca(std::uint64_t q, std::uint32_t t, unsigned threads,
                          const std::function<void(std::span<const std::uint32_t>)>& sink) {
    check_construction(q, t);
    const int n = static_cast<int>(t) - 2;
    auto geometry = std::make_shared<const Geometry>(Geometry::build(n, q));
    const GroupRep rep(geometry, arc_first_labeling(*geometry));
    const auto symbols = static_cast<std::uint32_t>(q + 1);
    std::vector<std::uint32_t> arc_labels(symbols);
    std::iota(arc_labels.begin(), arc_labels.end(), 0u);
    const PglEnumerator e(rep, arc_labels);

    auto emit = [symbols](const PglElement& el, std::vector<std::uint32_t>& row) {
        std::iota(row.begin(), row.end(), 0u);
        std::sort(row.begin(), row.end(), [&](std::uint32_t a, std::uint32_t b) { return el.images[a] < el.images[b]; });
    };

    threads = effective_threads(threads, e.chunk_count());
    std::uint64_t emitted = 0;
    if (threads == 1) {
        std::vector<std::uint32_t> row(symbols);
        e.for_each([&](const PglElement& el) {
            emit(el, row);
            sink(row);
            ++emitted;
        });
        return emitted;
    }
    // Chunks are computed a window at a time and emitted in chunk order.
    std::vector<std::vector<std::uint32_t>> buffers(threads);
    for (std::uint32_t first = 0; first < e.chunk_count(); first += threads) {
        const std::uint32_t count = std::min(threads, e.chunk_count() - first);
        parallel_for(count, threads, [&](unsigned, std::uint64_t k) {
            auto& buf = buffers[k];
            buf.clear();
            buf.reserve(e.chunk_size() * symbols);
            std::vector<std::uint32_t> row(symbols);
            e.run_chunk(first + static_cast<std::uint32_t>(k), [&](const PglElement& el) {
                emit(el, row);
                buf.insert(buf.end(), row.begin(), row.end());
            });
        });
        for (std::uint32_t k = 0; k < count; ++k) {
            for (std::size_t off = 0; off < buffers[k].size(); off += symbols) {
                sink(std::span<const std::uint32_t>(buffers[k].data() + off, symbols));
                ++emitted;
            }
        }
    }
    return emitted;
}

PscaConstruction construct_psca(std::uint64_t q, std::uint32_t t, const ConstructOptions& opts) {
    check_construction(q, t);
    const int n = static_cast<int>(t) - 2;
    PscaConstruction out;
    out.q = q;
    out.t = t;
    out.group_order = pgl_order_u64(n, q);
    if (out.group_order > opts.max_rows) {
        throw GuardExceeded("construction has " + std::to_string(out.group_order) +
                            " rows, above the materialization cap of " + std::to_string(opts.max_rows));
    }
    const std::uint64_t tf = factorial(t);
    if (out.group_order % tf != 0) throw std::logic_error("group order not divisible by t!");
    out.lambda = out.group_order / tf;
    out.arc = rational_normal_curve_arc(Geometry::build(n, q));
    out.rows = PermutationMultiset(static_cast<std::uint32_t>(q + 1));
    out.rows.reserve(out.group_order);
    stream_psca(q, t, opts.threads, [&](std::span<const std::uint32_t> row) { out.rows.add(row); });
    return out;
}

std::uint64_t least_prime_power_at_least(std::uint64_t x) {
    std::uint64_t q = std::max<std::uint64_t>(x, 2);
    while (!is_prime_power(q)) ++q;
    return q;
}

UpperBound g_upper_bound(std::uint64_t v, std::uint32_t t) {
    if (t < 4) throw PreconditionError("the bound needs t >= 4");
    if (v < t) throw PreconditionError("the bound needs v >= t");
    UpperBound out;
    const BigInt tf = factorial(t);
    const int n = static_cast<int>(t) - 2;

    out.q_chosen = least_prime_power_at_least(std::max<std::uint64_t>(v - 1, t - 1));
    const BigInt order = pgl_order(n, out.q_chosen);
    if (order % tf != 0) throw std::logic_error("group order not divisible by t!");
    out.constructive = order / tf;

    out.q_power_of_two = 1;
    while (out.q_power_of_two < v) out.q_power_of_two *= 2;
    const BigInt two_v = BigInt(2) * v;
    const auto exponent = static_cast<unsigned>((t - 1) * (t - 1));
    out.closed_form = boost::multiprecision::pow(two_v, exponent) / (tf * (two_v - 1));
    return out;
}

std::string psca_header(std::uint32_t v, std::uint32_t t, std::optional<std::uint64_t> lambda, std::uint64_t count) {
    std::ostringstream os;
    os << "psca v=" << v << " t=" << t << " lambda=";
    if (lambda) {
        os << *lambda;
    } else {
        os << '?';
    }
    os << " count=" << count;
    return os.str();
}

void write_psca_row(std::ostream& os, std::span<const std::uint32_t> row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ' ';
        os << row[i];
    }
    os << '\n';
}

void write_psca(std::ostream& os, const PermutationMultiset& x, std::uint32_t t, std::optional<std::uint64_t> lambda) {
    os << psca_header(x.v(), t, lambda, x.size()) << '\n';
    for (std::size_t i = 0; i < x.size(); ++i) write_psca_row(os, x.row(i));
}

namespace {

std::uint64_t parse_field(const std::string& token, const std::string& key) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) throw PscaFormatError("header: expected " + prefix);
    const std::string value = token.substr(prefix.size());
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw PscaFormatError("header: bad value for " + key);
    }
    return std::stoull(value);
}

}  // namespace

PscaFile read_psca(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw PscaFormatError("empty file");
    std::istringstream header(line);
    std::string magic, tv, tt, tl, tc, extra;
    if (!(header >> magic >> tv >> tt >> tl >> tc) || (header >> extra) || magic != "psca") {
        throw PscaFormatError("header must read: psca v=<v> t=<t> lambda=<lambda|?> count=<N>");
    }
    PscaFile out;
    const auto v = parse_field(tv, "v");
    out.t = static_cast<std::uint32_t>(parse_field(tt, "t"));
    if (tl != "lambda=?") out.lambda = parse_field(tl, "lambda");
    const auto count = parse_field(tc, "count");
    if (v == 0 || v > std::numeric_limits<std::uint32_t>::max()) throw PscaFormatError("header: bad v");

    out.rows = PermutationMultiset(static_cast<std::uint32_t>(v));
    std::vector<std::uint32_t> row(v);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (!std::getline(is, line)) throw PscaFormatError("file ends after " + std::to_string(i) + " rows");
        std::istringstream ls(line);
        for (auto& x : row) {
            long long value = 0;
            if (!(ls >> value) || value < 0) throw PscaFormatError("row " + std::to_string(i + 1) + ": bad entry");
            x = static_cast<std::uint32_t>(value);
        }
        if (ls >> extra) throw PscaFormatError("row " + std::to_string(i + 1) + ": too many entries");
        try {
            out.rows.add(row);
        } catch (const PreconditionError&) {
            throw PscaFormatError("row " + std::to_string(i + 1) + " is not a permutation of [v]");
        }
    }
    while (std::getline(is, line)) {
        if (!line.empty()) throw PscaFormatError("more rows than count");
    }
    return out;
}

}  // namespace psca
