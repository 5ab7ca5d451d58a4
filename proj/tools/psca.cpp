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

// Command-line front end: construct, verify, thm2, bound, geometry, singer.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "psca/ascstats.hpp"
#include "psca/io.hpp"
#include "psca/psca.hpp"

namespace {

using namespace psca;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kPrecondition = 2;
constexpr int kGuard = 3;

constexpr std::uint64_t kLightRows = 10'000'000;
constexpr std::uint64_t kHeavyRows = 2'000'000'000;
constexpr std::uint64_t kLightThm2Order = 100'000;

struct Common {
    unsigned threads = 0;
    std::string format = "text";
    std::string out;
    bool heavy = false;
};

unsigned threads_of(const Common& c) { return c.threads ? c.threads : default_threads(); }

// Output stream for --out, or stdout for "" and "-".
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void print_histogram(std::ostream& os, const std::map<std::uint64_t, std::uint64_t>& h) {
    os << "histogram (count: sequences):";
    for (const auto& [count, n] : h) os << " " << count << ":" << n;
    os << "\n";
}

std::string join(std::span<const std::uint32_t> s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
    return out;
}

int cmd_construct(std::uint64_t q, std::uint32_t t, std::uint64_t max_rows, const Common& c) {
    try {
        const int n = static_cast<int>(t) - 2;
        if (t < 3) throw PreconditionError("construction needs t >= 3");
        if (!is_prime_power(q)) throw PreconditionError("q is not a prime power");
        if (q < t - 1) throw PreconditionError("construction needs q >= t-1");
        const BigInt order = pgl_order(n, q);
        const std::uint64_t limit = max_rows ? max_rows : (c.heavy ? kHeavyRows : kLightRows);
        if (order > limit) {
            std::cerr << "group has " << order << " elements, above the limit " << limit
                      << (c.heavy ? "" : " (pass --heavy or raise --max-group-size)") << "\n";
            return kGuard;
        }
        const auto rows = to_u64(order);
        const std::uint64_t lambda = rows / factorial(t);
        Sink sink(c.out);
        auto& os = sink.os();
        os << psca_header(static_cast<std::uint32_t>(q + 1), t, lambda, rows) << "\n";
        const auto written = stream_psca(q, t, threads_of(c), [&](std::span<const std::uint32_t> row) { write_psca_row(os, row); });
        os.flush();
        if (written != rows) throw std::logic_error("row count differs from the group order");
        std::cerr << "wrote PSCA(" << q + 1 << ", " << t << ", " << lambda << ") with " << rows << " rows\n";
        return kOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
}

int cmd_verify(const std::string& path, std::optional<std::uint32_t> t_flag, const Common& c) {
    PscaFile file;
    try {
        std::ifstream is(path);
        if (!is) throw PscaFormatError("cannot read " + path);
        file = read_psca(is);
    } catch (const std::exception& e) {
        std::cerr << "malformed PSCA file: " << e.what() << "\n";
        return kPrecondition;
    }
    const std::uint32_t t = t_flag.value_or(file.t);
    if (t < 1 || t > file.rows.v()) {
        std::cerr << "strength " << t << " outside [1, v]\n";
        return kPrecondition;
    }
    const auto verdict = verify_psca(file.rows, t, threads_of(c));
    const auto& rep = verdict.report;
    if (c.format == "json") {
        nlohmann::json j{{"v", rep.v}, {"t", rep.t}, {"rows", rep.rows}, {"perfect", bool(verdict)}};
        if (verdict.lambda) j["lambda"] = *verdict.lambda;
        nlohmann::json h = nlohmann::json::object();
        for (const auto& [count, n] : rep.histogram) h[std::to_string(count)] = n;
        j["histogram"] = h;
        nlohmann::json w = nlohmann::json::object();
        for (const auto& [count, seqs] : rep.witnesses) w[std::to_string(count)] = seqs;
        j["witnesses"] = w;
        if (!verdict) j["problem"] = verdict.problem;
        std::cout << j.dump(2) << "\n";
    } else if (verdict) {
        std::cout << "PSCA(" << rep.v << ", " << rep.t << ", " << *verdict.lambda << "): " << rep.rows << " rows\n";
    } else {
        std::cout << "not a PSCA of strength " << t << ": " << verdict.problem << "\n";
        print_histogram(std::cout, rep.histogram);
        std::size_t shown = 0;
        for (const auto& [count, seqs] : rep.witnesses) {
            for (const auto& s : seqs) {
                if (shown++ == 10) break;
                std::cout << "  covered " << count << " times (expected " << rep.expected << "): " << join(s) << "\n";
            }
        }
    }
    return verdict ? kOk : kFailed;
}

int cmd_thm2(std::uint64_t q, std::uint64_t max_group, const std::string& dset, const Common& c) {
    try {
        std::optional<DifferenceSet> d;
        if (!dset.empty()) {
            std::ifstream is(dset);
            if (!is) throw DifferenceSetError("cannot read " + dset);
            std::stringstream ss;
            ss << is.rdbuf();
            d = parse_difference_set(ss.str(), q);
        }
        if (!is_prime_power(q)) throw std::invalid_argument("q is not a prime power");
        const BigInt order = pgl_order(2, q);
        if (!c.heavy && order > kLightThm2Order && max_group == 0) {
            std::cerr << "|PGL(3," << q << ")| = " << order << "; pass --heavy to stream it\n";
            return kGuard;
        }
        Thm2Options opts;
        opts.threads = threads_of(c);
        if (max_group) opts.max_group_size = max_group;
        const auto report = coverage_histogram_thm2(q, opts, d);
        const auto j = ascstats_json(report);
        if (!c.out.empty() && c.out != "-") {
            Sink(c.out).os() << j.dump(2) << "\n";
        }
        if (c.format == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            const auto& s = report.sums;
            std::cout << "q=" << q << " r=" << report.r << " |G|=" << report.group_order << " lambda=" << report.lambda
                      << "\n";
            std::cout << "ascent sums e1..e4 = " << s.e1 << " " << s.e2 << " " << s.e3 << " " << s.e4 << ", e5 = " << s.e5
                      << "\n";
            std::cout << "census:";
            for (const auto& [cls, n] : report.census) std::cout << " " << to_string(cls) << "=" << n;
            std::cout << "\n";
            print_histogram(std::cout, report.histogram);
            std::cout << "perfect " << report.perfect_count << "/" << report.total << " = " << report.perfect_fraction
                      << " (bounds q/(q+1) = " << report.bound << ", 1-1/q = " << report.weaker_bound << ")\n";
            std::cout << "frames and T_i exact: " << (report.frames_and_t_exact() ? "yes" : "no") << "\n";
        }
        return report.fraction_exceeds_bounds() && report.frames_and_t_exact() ? kOk : kFailed;
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
}

int cmd_bound(std::uint64_t v, std::uint32_t t, const Common& c) {
    try {
        const auto b = g_upper_bound(v, t);
        if (c.format == "json") {
            std::cout << nlohmann::json{{"v", v},
                                        {"t", t},
                                        {"q", b.q_chosen},
                                        {"constructive", exact_integer(b.constructive)},
                                        {"q_power_of_two", b.q_power_of_two},
                                        {"closed_form", exact_integer(b.closed_form)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "g(" << v << ", " << t << ") <= " << b.constructive << " (q = " << b.q_chosen << ")\n";
            std::cout << "closed form: " << b.closed_form << " (q = " << b.q_power_of_two << ")\n";
        }
        return kOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
}

int cmd_geometry(int n, std::uint64_t q, const Common& c) {
    try {
        const auto g = Geometry::build(n, q);
        Sink(c.out).os() << geometry_json(g).dump(1) << "\n";
        return kOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
}

int cmd_singer(std::uint64_t q, const std::string& dset, const Common& c) {
    try {
        DifferenceSet d;
        if (dset.empty()) {
            d = singer_difference_set(q);
        } else {
            std::ifstream is(dset);
            if (!is) throw DifferenceSetError("cannot read " + dset);
            std::stringstream ss;
            ss << is.rdbuf();
            d = parse_difference_set(ss.str(), q);
        }
        Sink(c.out).os() << singer_json(d).dump(1) << "\n";
        return kOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
}

void add_common(CLI::App* app, Common& c) {
    app->add_option("--threads", c.threads, "worker threads (default: PSCA_THREADS or all cores)");
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app->add_option("--out", c.out, "output file ('-' for stdout)");
    app->add_flag("--heavy", c.heavy, "allow long-running instances");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect sequence covering arrays from projective geometry"};
    app.require_subcommand(1);
    Common common;

    std::uint64_t q = 0, v = 0, max_group = 0;
    std::uint32_t t = 0;
    int n = 2;
    std::string file, dset;
    std::optional<std::uint32_t> verify_t;

    auto* construct = app.add_subcommand("construct", "write the PSCA(q+1, t, |PGL(t-1,q)|/t!)");
    construct->add_option("--q", q, "prime power")->required();
    construct->add_option("--t", t, "strength")->required();
    construct->add_option("--max-group-size", max_group, "refuse larger groups");
    add_common(construct, common);

    auto* verify = app.add_subcommand("verify", "count coverage of every t-sequence");
    verify->add_option("file", file, "PSCA text file")->required();
    verify->add_option("--t", verify_t, "strength (default: from the header)");
    add_common(verify, common);

    auto* thm2 = app.add_subcommand("thm2", "coverage histogram of PGL(3,q) under the Singer labeling");
    thm2->add_option("--q", q, "prime power")->required();
    thm2->add_option("--max-group-size", max_group, "refuse larger groups");
    thm2->add_option("--difference-set", dset, "planar difference set file");
    add_common(thm2, common);

    auto* bound = app.add_subcommand("bound", "upper bounds on g(v, t)");
    bound->add_option("v,--v", v, "alphabet size")->required();
    bound->add_option("--t", t, "strength")->required();
    add_common(bound, common);

    auto* geometry = app.add_subcommand("geometry", "dump PG(n, q) as JSON");
    geometry->add_option("--n", n, "dimension");
    geometry->add_option("--q", q, "prime power")->required();
    add_common(geometry, common);

    auto* singer = app.add_subcommand("singer", "dump the Singer difference set and its lines as JSON");
    singer->add_option("--q", q, "prime power")->required();
    singer->add_option("--difference-set", dset, "validate and dump this set instead");
    add_common(singer, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kPrecondition;
    }

    try {
        if (*construct) return cmd_construct(q, t, max_group, common);
        if (*verify) return cmd_verify(file, verify_t, common);
        if (*thm2) return cmd_thm2(q, max_group, dset, common);
        if (*bound) return cmd_bound(v, t, common);
        if (*geometry) return cmd_geometry(n, q, common);
        if (*singer) return cmd_singer(q, dset, common);
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return kPrecondition;
}
