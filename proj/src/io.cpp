/**************************************************************************
 * io.cpp
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

#include "psca/io.hpp"

#include <sstream>
#include <vector>

namespace psca {

using nlohmann::json;

json exact_integer(const BigInt& x) {
    const BigInt limit = BigInt(1) << 53;
    if (x <= limit && x >= -limit) return static_cast<std::int64_t>(x);
    return x.str();
}

json geometry_json(const Geometry& g) {
    const Field& f = g.field();
    json points = json::array();
    for (PointIndex p = 0; p < g.size(); ++p) {
        json c = json::array();
        for (auto x : g.coords(p)) c.push_back(x.value == 0 ? -1 : static_cast<std::int64_t>(f.log(x)));
        points.push_back(std::move(c));
    }
    json out{{"q", g.order()}, {"n", g.dimension()}, {"points", std::move(points)}};
    if (g.dimension() == 2) out["lines"] = g.lines();
    return out;
}

json singer_json(const DifferenceSet& d) {
    return json{{"q", d.q}, {"r", d.r}, {"D", d.elems}, {"lines", translate_lines(d)}};
}

namespace {

json histogram_json(const std::map<std::uint64_t, std::uint64_t>& h) {
    json out = json::object();
    for (const auto& [count, mult] : h) out[std::to_string(count)] = mult;
    return out;
}

}  // namespace

json ascstats_json(const Thm2Report& report) {
    json census = json::object();
    for (const auto& [cls, n] : report.census) census[std::string(to_string(cls))] = exact_integer(n);
    json classes = json::object();
    for (const auto& [cls, h] : report.class_histograms) classes[std::string(to_string(cls))] = histogram_json(h);
    const auto& s = report.sums;
    return json{{"q", report.q},
                {"r", report.r},
                {"D", report.difference_set.elems},
                {"group_order", exact_integer(report.group_order)},
                {"lambda", exact_integer(report.lambda)},
                {"e", {exact_integer(s.e1), exact_integer(s.e2), exact_integer(s.e3), exact_integer(s.e4)}},
                {"e5", exact_integer(s.e5)},
                {"census", std::move(census)},
                {"histogram", histogram_json(report.histogram)},
                {"class_histograms", std::move(classes)},
                {"perfect_count", exact_integer(report.perfect_count)},
                {"total", exact_integer(report.total)},
                {"perfect_fraction", report.perfect_fraction},
                {"bound", report.bound},
                {"weaker_bound", report.weaker_bound},
                {"frames_and_t_exact", report.frames_and_t_exact()}};
}

DifferenceSet parse_difference_set(const std::string& text, std::optional<std::uint64_t> q) {
    std::vector<std::int64_t> elems;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw DifferenceSetError(std::string("malformed difference set: ") + e.what());
        }
        try {
            if (j.is_object()) {
                if (j.contains("q")) {
                    const auto fq = j.at("q").get<std::uint64_t>();
                    if (q && *q != fq) throw DifferenceSetError("difference set is for a different q");
                    q = fq;
                }
                elems = j.at("D").get<std::vector<std::int64_t>>();
            } else {
                elems = j.get<std::vector<std::int64_t>>();
            }
        } catch (const json::exception& e) {
            throw DifferenceSetError(std::string("malformed difference set: ") + e.what());
        }
    } else {
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            try {
                std::size_t used = 0;
                elems.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw DifferenceSetError("not an integer: " + tok);
            }
        }
    }
    if (!q) throw DifferenceSetError("q is not given");
    auto d = validate_difference_set(*q, elems);
    if (d.elems.size() != *q + 1) throw DifferenceSetError("a planar difference set has q+1 elements");
    return d;
}

}  // namespace psca
