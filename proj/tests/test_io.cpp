/**************************************************************************
 * test_io.cpp
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

#include "psca/io.hpp"

using namespace psca;
using nlohmann::json;

TEST(Io, ExactIntegers) {
    EXPECT_EQ(exact_integer(BigInt(5)), json(5));
    EXPECT_EQ(exact_integer(BigInt(1) << 53), json(std::int64_t{1} << 53));
    EXPECT_EQ(exact_integer((BigInt(1) << 53) + 1), json("9007199254740993"));
    EXPECT_EQ(exact_integer(BigInt("1000000000000000000000000000000")), json("1000000000000000000000000000000"));
    EXPECT_EQ(exact_integer(BigInt(-7)), json(-7));
}

TEST(Io, GeometryJson) {
    const auto g = Geometry::build(2, 4);
    const auto j = geometry_json(g);
    EXPECT_EQ(j["q"], 4);
    EXPECT_EQ(j["points"].size(), 21u);
    EXPECT_EQ(j["lines"].size(), 21u);
    EXPECT_EQ(j["points"][0], json({-1, -1, 0}));
    for (const auto& p : j["points"]) {
        for (const auto& c : p) {
            EXPECT_GE(c.get<int>(), -1);
            EXPECT_LE(c.get<int>(), 2);
        }
    }
    EXPECT_FALSE(geometry_json(Geometry::build(3, 2)).contains("lines"));
}

TEST(Io, SingerJson) {
    const auto j = singer_json(singer_difference_set(2));
    EXPECT_EQ(j["r"], 7);
    EXPECT_EQ(j["D"], json({0, 1, 3}));
    EXPECT_EQ(j["lines"][1], json({1, 2, 4}));
    EXPECT_EQ(j["lines"][6], json({0, 2, 6}));
}

TEST(Io, AscStatsJson) {
    const auto j = ascstats_json(coverage_histogram_thm2(2));
    EXPECT_EQ(j["e"], json({7, 7, 7, 7}));
    EXPECT_EQ(j["e5"], 28);
    EXPECT_EQ(j["histogram"], json({{"7", 840}}));
    EXPECT_EQ(j["census"]["frame"], 168);
    EXPECT_EQ(j["perfect_fraction"], 1.0);
    EXPECT_DOUBLE_EQ(j["bound"].get<double>(), 2.0 / 3.0);
    EXPECT_TRUE(j["frames_and_t_exact"].get<bool>());
}

TEST(Io, ParseDifferenceSet) {
    EXPECT_EQ(parse_difference_set("{\"q\": 2, \"D\": [1, 2, 4]}", std::nullopt).elems,
              (std::vector<std::uint32_t>{0, 1, 3}));
    EXPECT_EQ(parse_difference_set("[0, 1, 3, 9]", 3).elems, (std::vector<std::uint32_t>{0, 1, 3, 9}));
    EXPECT_EQ(parse_difference_set("0 1 3 9\n", 3).elems, (std::vector<std::uint32_t>{0, 1, 3, 9}));
    EXPECT_THROW(parse_difference_set("0 1 3", std::nullopt), DifferenceSetError);
    EXPECT_THROW(parse_difference_set("0 1 x", 2), DifferenceSetError);
    EXPECT_THROW(parse_difference_set("{\"q\": 3, \"D\": [0, 1, 3]}", 2), DifferenceSetError);
    EXPECT_THROW(parse_difference_set("[0, 1, 2]", 2), NotADifferenceSet);
    EXPECT_THROW(parse_difference_set("{bad", 2), DifferenceSetError);
}
