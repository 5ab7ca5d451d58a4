/**************************************************************************
 * core.cpp
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "psca/ascstats.hpp"
#include "psca/grp.hpp"
#include "psca/io.hpp"
#include "psca/psca.hpp"
#include "psca/singer.hpp"

namespace py = pybind11;
using namespace psca;

namespace {

using Rows = std::vector<std::vector<std::uint32_t>>;

PermutationMultiset to_multiset(const Rows& rows) {
    if (rows.empty()) throw PreconditionError("no rows");
    PermutationMultiset x(static_cast<std::uint32_t>(rows.front().size()));
    x.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != x.v()) throw PreconditionError("rows have different lengths");
        x.add(r);
    }
    return x;
}

Rows to_rows(const PermutationMultiset& x) {
    Rows out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto r = x.row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

py::dict report_dict(const CoverageReport& r) {
    py::dict d;
    d["v"] = r.v;
    d["t"] = r.t;
    d["rows"] = r.rows;
    d["histogram"] = r.histogram;
    d["lambda"] = r.lambda;
    d["expected"] = r.expected;
    d["witnesses"] = r.witnesses;
    return d;
}

unsigned threads_or_default(unsigned threads) { return threads == 0 ? default_threads() : threads; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Permutation sequence covering arrays from projective geometry.";

    auto value_error = py::handle(PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", value_error);
    py::register_exception<PscaFormatError>(m, "PscaFormatError", value_error);
    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
    auto ds_error = py::register_exception<DifferenceSetError>(m, "DifferenceSetError", value_error);
    py::register_exception<NotADifferenceSet>(m, "NotADifferenceSet", ds_error);
    py::register_exception<NonPlanarDifferenceSet>(m, "NonPlanarDifferenceSet", ds_error);

    m.def("is_prime_power", &is_prime_power, py::arg("q"));
    m.def(
        "pgl_order", [](int n, std::uint64_t q) { return pgl_order(n, q).str(); }, py::arg("n"), py::arg("q"),
        "Order of PGL(n+1, q) as a decimal string.");
    m.def("default_threads", &default_threads);

    m.def(
        "construct",
        [](std::uint64_t q, std::uint32_t t, unsigned threads, std::uint64_t max_rows) {
            ConstructOptions opts;
            opts.threads = threads_or_default(threads);
            opts.max_rows = max_rows;
            const auto c = [&] {
                py::gil_scoped_release release;
                return construct_psca(q, t, opts);
            }();
            py::dict d;
            d["q"] = c.q;
            d["t"] = c.t;
            d["group_order"] = c.group_order;
            d["lambda"] = c.lambda;
            d["arc"] = c.arc;
            d["rows"] = to_rows(c.rows);
            return d;
        },
        py::arg("q"), py::arg("t"), py::arg("threads") = 1u, py::arg("max_rows") = 10'000'000ull);

    m.def(
        "coverage",
        [](const Rows& rows, std::uint32_t t, unsigned threads) {
            const auto x = to_multiset(rows);
            py::gil_scoped_release release;
            auto r = coverage_report(x, t, threads_or_default(threads));
            py::gil_scoped_acquire acquire;
            return report_dict(r);
        },
        py::arg("rows"), py::arg("t"), py::arg("threads") = 1u);

    m.def(
        "verify",
        [](const Rows& rows, std::uint32_t t, unsigned threads) {
            const auto x = to_multiset(rows);
            PscaVerdict v;
            {
                py::gil_scoped_release release;
                v = verify_psca(x, t, threads_or_default(threads));
            }
            py::dict d = report_dict(v.report);
            d["lambda"] = v.lambda;
            d["problem"] = v.problem;
            return d;
        },
        py::arg("rows"), py::arg("t"), py::arg("threads") = 1u);

    m.def(
        "delete_symbols", [](const Rows& rows, std::uint32_t j) { return to_rows(delete_symbols(to_multiset(rows), j)); },
        py::arg("rows"), py::arg("j"));

    m.def(
        "upper_bound",
        [](std::uint64_t v, std::uint32_t t) {
            const auto b = g_upper_bound(v, t);
            py::dict d;
            d["q"] = b.q_chosen;
            d["constructive"] = py::int_(py::str(b.constructive.str()));
            d["q_power_of_two"] = b.q_power_of_two;
            d["closed_form"] = py::int_(py::str(b.closed_form.str()));
            return d;
        },
        py::arg("v"), py::arg("t"));

    m.def(
        "write_psca",
        [](const Rows& rows, std::uint32_t t, std::optional<std::uint64_t> lambda) {
            std::ostringstream os;
            write_psca(os, to_multiset(rows), t, lambda);
            return os.str();
        },
        py::arg("rows"), py::arg("t"), py::arg("lambda_") = std::nullopt);
    m.def(
        "read_psca",
        [](const std::string& text) {
            std::istringstream is(text);
            const auto f = read_psca(is);
            py::dict d;
            d["t"] = f.t;
            d["lambda"] = f.lambda;
            d["rows"] = to_rows(f.rows);
            return d;
        },
        py::arg("text"));

    m.def("singer_difference_set", [](std::uint64_t q) { return singer_difference_set(q).elems; }, py::arg("q"));
    m.def(
        "validate_difference_set",
        [](std::uint64_t q, const std::vector<std::int64_t>& elems) { return validate_difference_set(q, elems).elems; },
        py::arg("q"), py::arg("elems"));

    // JSON documents; the package wrapper decodes them.
    m.def(
        "_geometry_json", [](int n, std::uint64_t q) { return geometry_json(Geometry::build(n, q)).dump(); },
        py::arg("n"), py::arg("q"));
    m.def(
        "_singer_json", [](std::uint64_t q) { return singer_json(singer_difference_set(q)).dump(); }, py::arg("q"));
    m.def(
        "_thm2_json",
        [](std::uint64_t q, unsigned threads, std::uint64_t max_group_size,
           std::optional<std::vector<std::int64_t>> difference_set) {
            Thm2Options opts;
            opts.threads = threads_or_default(threads);
            opts.max_group_size = max_group_size;
            std::optional<DifferenceSet> user;
            if (difference_set) user = validate_difference_set(q, *difference_set);
            py::gil_scoped_release release;
            return ascstats_json(coverage_histogram_thm2(q, opts, user)).dump();
        },
        py::arg("q"), py::arg("threads") = 1u, py::arg("max_group_size") = 1'000'000'000ull,
        py::arg("difference_set") = std::nullopt);
}
