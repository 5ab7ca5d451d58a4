/**************************************************************************
 * acceptance.cpp
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

// Acceptance suite: one PASS/FAIL line per criterion. Long instances run
// only with --heavy.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "psca/ascstats.hpp"
#include "psca/psca.hpp"

using namespace psca;

namespace {

struct Outcome {
    bool pass = true;
    bool skipped = false;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
        }
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;  // wall-clock limit; exceeding it fails the criterion
    std::function<Outcome(bool heavy, std::mt19937_64& rng)> run;
    // Non-empty when the criterion cannot hold as written; see README.
    std::string known_red;
};

std::string str(std::uint64_t x) { return std::to_string(x); }

std::string hist_str(const std::map<std::uint64_t, std::uint64_t>& h) {
    std::string s = "{";
    for (const auto& [k, v] : h) s += (s.size() > 1 ? ", " : "") + str(k) + ": " + str(v);
    return s + "}";
}

std::vector<std::uint32_t> random_sequence(std::mt19937_64& rng, std::uint32_t r, std::uint32_t t) {
    std::vector<std::uint32_t> all(r);
    std::iota(all.begin(), all.end(), 0u);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(t);
    return all;
}

Outcome c1(bool, std::mt19937_64&) {
    Outcome o;
    const auto c = construct_psca(3, 4);
    o.require(c.rows.size() == 5616 && c.rows.v() == 4, "5616 rows on 4 symbols");
    const auto v = verify_psca(c.rows, 4);
    const std::map<std::uint64_t, std::uint64_t> want{{234, 24}};
    o.require(v.report.histogram == want, "histogram " + hist_str(v.report.histogram) + " == {234: 24}");
    o.note("rows=" + str(c.rows.size()) + " histogram=" + hist_str(v.report.histogram));
    return o;
}

Outcome c2(bool, std::mt19937_64&) {
    Outcome o;
    for (auto [q, lambda, seqs] : {std::tuple{4u, 2520u, 120u}, {5u, 15500u, 360u}}) {
        const auto c = construct_psca(q, 4);
        const auto v = verify_psca(c.rows, 4);
        const std::map<std::uint64_t, std::uint64_t> want{{lambda, seqs}};
        o.require(v.report.histogram == want, "q=" + str(q) + " histogram " + hist_str(v.report.histogram));
        o.note("q=" + str(q) + " lambda=" + (v.lambda ? str(*v.lambda) : "none") + " over " + str(v.report.total()));
    }
    return o;
}

Outcome c3(bool, std::mt19937_64&) {
    Outcome o;
    const auto c = construct_psca(4, 4);
    const auto d = delete_symbols(c.rows, 4);
    const auto v = verify_psca(d, 4);
    o.require(d.v() == 4 && v.lambda == 2520u, "PSCA(4,4,2520) after deletion");
    o.note("lambda=" + (v.lambda ? str(*v.lambda) : "none"));
    return o;
}

Outcome c4(bool, std::mt19937_64&) {
    Outcome o;
    const auto c = construct_psca(3, 4);
    const auto v3 = verify_psca(c.rows, 3);
    const auto v2 = verify_psca(c.rows, 2);
    o.require(v3.lambda == 936u, "t'=3 lambda 936");
    o.require(v2.lambda == 1404u, "t'=2 lambda 1404");
    o.note("t'=3 lambda=" + (v3.lambda ? str(*v3.lambda) : "none") + ", t'=2 lambda=" +
           (v2.lambda ? str(*v2.lambda) : "none"));
    return o;
}

Outcome c5(bool, std::mt19937_64&) {
    Outcome o;
    for (auto [q, want] : {std::pair{2u, 168u}, {3u, 5616u}, {4u, 60480u}, {5u, 372000u}}) {
        auto g = std::make_shared<const Geometry>(Geometry::build(2, q));
        const GroupRep rep(g);
        std::uint64_t n = 0;
        PglEnumerator(rep, {0}).for_each([&](const PglElement&) { ++n; });
        o.require(n == want && pgl_order_u64(2, q) == want, "q=" + str(q) + " count " + str(n));
        o.note("q=" + str(q) + ": " + str(n));
    }
    return o;
}

Outcome c6(bool, std::mt19937_64& rng) {
    Outcome o;
    for (std::uint32_t q : {2u, 3u}) {
        auto g = std::make_shared<const Geometry>(Geometry::build(2, q));
        const GroupRep rep(g);
        auto frame = [&] {
            while (true) {
                auto s = random_sequence(rng, g->size(), 4);
                if (is_frame(s, *g)) return s;
            }
        };
        int unique = 0;
        for (int trial = 0; trial < 10; ++trial) {
            const auto s = frame(), t = frame();
            int hits = 0;
            PglEnumerator(rep, s).for_each([&](const PglElement& el) {
                hits += std::equal(el.images.begin(), el.images.end(), t.begin());
            });
            unique += hits == 1;
        }
        o.require(unique == 10, "q=" + str(q) + " unique in " + str(unique) + "/10");
        o.note("q=" + str(q) + ": " + str(unique) + "/10 pairs with exactly one element");
    }
    return o;
}

Outcome c7(bool, std::mt19937_64& rng) {
    Outcome o;
    auto g = std::make_shared<const Geometry>(Geometry::build(2, 3));
    const GroupRep rep(g);
    const auto all = materialize(rep);
    o.require(all.size() == 5616, "5616 permutations");
    int agree = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = random_sequence(rng, g->size(), 4);
        std::uint64_t brute = 0;
        for (const auto& p : all) brute += covers(p.perm, s);
        const auto st = orbit_asc_stab(s, rep);
        agree += st.asc_size * st.stab_size == brute;
    }
    o.require(agree == 100, "agreement " + str(agree) + "/100");
    o.note(str(agree) + "/100 sequences agree");
    return o;
}

Outcome c8(bool, std::mt19937_64& rng) {
    Outcome o;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto s = ascent_sums(LabeledLineSet::from_difference_set(singer_difference_set(q)));
        const auto qi = static_cast<std::int64_t>(q);
        const std::int64_t e5 = (qi * qi + qi + 1) * qi * qi * qi * (qi + 1) * (qi - 1) / 6;
        const bool ok = s.e5 == e5 && 4 * s.e1 == e5 && 4 * s.e2 == e5 && 4 * s.e3 == e5 && 4 * s.e4 == e5;
        o.require(ok, "Singer quarters q=" + str(q));
    }
    int halves = 0, linesums = 0;
    for (std::uint64_t q : {2, 3, 4}) {
        const auto g = Geometry::build(2, q);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::uint32_t> l(g.size());
            std::iota(l.begin(), l.end(), 0u);
            std::shuffle(l.begin(), l.end(), rng);
            const auto L = LabeledLineSet::from_labeling(g, Labeling(l));
            const auto s = ascent_sums(L);
            halves += 2 * (s.e1 + s.e4) == s.e5 && 2 * (s.e2 + s.e3) == s.e5 && s.e1 + s.e2 + s.e3 + s.e4 == s.e5;
            linesums += linesum_check(L).holds();
        }
    }
    o.require(halves == 60, "halves " + str(halves) + "/60");
    o.require(linesums == 60, "line sums " + str(linesums) + "/60");
    o.note("Singer quarters q in {2,3,4,5,7,8,9}; halves " + str(halves) + "/60; line sums " + str(linesums) + "/60");
    return o;
}

Outcome c9(bool heavy, std::mt19937_64&) {
    Outcome o;
    std::vector<std::uint64_t> qs{2, 3, 4};
    if (heavy) qs.push_back(5);
    for (auto q : qs) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = coverage_histogram_thm2(q, {default_threads()});
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const double budget = q <= 3 ? 10 : q == 4 ? 120 : 3600;
        o.require(r.frames_and_t_exact(), "q=" + str(q) + " frames and T_i at lambda");
        o.require(r.fraction_exceeds_bounds(), "q=" + str(q) + " fraction above bounds");
        o.require(secs < budget, "q=" + str(q) + " runtime");
        if (q == 3) {
            const auto& c = r.census;
            const bool census = c.at(SequenceClass::Frame) == 5616 && c.at(SequenceClass::T1) == 2808 &&
                                c.at(SequenceClass::T2) == 2808 && c.at(SequenceClass::T3) == 2808 &&
                                c.at(SequenceClass::T4) == 2808 && c.at(SequenceClass::Collinear4) == 312 &&
                                r.total == 17160;
            o.require(census, "q=3 census");
        }
        std::ostringstream ss;
        ss << "q=" << q << " perfect " << r.perfect_count << "/" << r.total << " (" << secs << " s)";
        o.note(ss.str());
    }
    if (!heavy) o.note("q=5 needs --heavy");
    return o;
}

Outcome c10(bool, std::mt19937_64&) {
    Outcome o;
    int ok = 0, n = 0;
    for (std::uint64_t q = 2; q <= 25; ++q) {
        if (!is_prime_power(q)) continue;
        ++n;
        const auto d = singer_difference_set(q);
        std::vector<int> hits(d.r, 0);
        for (auto a : d.elems)
            for (auto b : d.elems)
                if (a != b) ++hits[(a + d.r - b) % d.r];
        const bool planar = std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; });
        bool incidence = false;
        try {
            // The constructor checks sizes and that every pair lies on exactly one line.
            const LabeledLineSet L(q, translate_lines(d));
            incidence = L.translate_generated();
        } catch (const std::exception&) {
        }
        ok += planar && incidence;
        o.require(planar && incidence, "q=" + str(q));
    }
    o.note(str(ok) + "/" + str(n) + " prime powers q <= 25");
    return o;
}

Outcome c11(bool heavy, std::mt19937_64& rng) {
    Outcome o;
    if (!heavy) {
        o.skipped = true;
        o.note("needs --heavy");
        return o;
    }
    auto g = std::make_shared<const Geometry>(Geometry::build(3, 4));
    const GroupRep rep(g, arc_first_labeling(*g));
    const std::uint64_t lambda = rep.order() / 120;
    for (int trial = 0; trial < 5; ++trial) {
        const auto s = random_sequence(rng, 5, 5);
        const auto t0 = std::chrono::steady_clock::now();
        const auto c = streamed_coverage(s, rep, default_threads());
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(c == lambda, "coverage of sequence " + str(trial));
        o.require(secs < 600, "runtime of sequence " + str(trial));
        std::ostringstream ss;
        ss << "(";
        for (std::size_t i = 0; i < s.size(); ++i) ss << (i ? "," : "") << s[i];
        ss << ")=" << c << " (" << secs << " s)";
        o.note(ss.str());
    }
    o.note("|G|/120=" + str(lambda));
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    bool heavy = false;
    std::uint64_t seed = 20260101;
    std::vector<int> only;
    app.add_flag("--heavy", heavy, "include long instances");
    app.add_option("--seed", seed, "seed for the random choices");
    app.add_option("--only", only, "run only these criteria");
    CLI11_PARSE(app, argc, argv);

    const std::string cascade_red =
        "a PSCA(4,2,L) has 2L rows, so 5616 rows force L = 2808 = 234*4!/2!, not 234*C(4,2) = 1404";
    const std::vector<Criterion> criteria{
        {1, "construction q=3 t=4", 5, c1, ""},
        {2, "construction q=4,5 t=4", 330, c2, ""},
        {3, "deletion monotonicity", 30, c3, ""},
        {4, "strength cascade", 5, c4, cascade_red},
        {5, "group orders", 60, c5, ""},
        {6, "unique projectivity between frames", 60, c6, ""},
        {7, "coverage = |Asc| |Stab|", 60, c7, ""},
        {8, "ascent-sum identities", 10, c8, ""},
        {9, "almost-perfect coverage of 4-sequences", heavy ? 3730.0 : 130.0, c9, ""},
        {10, "planar difference sets q <= 25", 60, c10, ""},
        {11, "t=5 coverage by streaming", 3000, c11, ""},
    };

    int unexpected = 0, known = 0, passed = 0, skipped = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(c.id));
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(heavy, rng);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) o.require(false, "time budget " + std::to_string(c.budget_seconds) + " s");
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.id << " [" << c.title << "]: " << (o.skipped ? "SKIP" : o.pass ? "PASS" : "FAIL") << " (" << secs
             << " s) " << o.detail;
        if (!o.pass && !c.known_red.empty()) {
            line << " | known red: " << c.known_red;
            ++known;
        } else if (!o.pass) {
            ++unexpected;
        } else if (o.skipped) {
            ++skipped;
        } else {
            ++passed;
        }
        std::cout << line.str() << std::endl;
    }
    std::cout << "summary: " << passed << " pass, " << known << " known red, " << unexpected << " unexpected failures, " << skipped << " skipped"
              << (heavy ? "" : " (light tier)") << std::endl;
    return unexpected == 0 ? 0 : 1;
}
