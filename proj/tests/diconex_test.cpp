// Copyright 2026 The Vesta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "vesta/diconex.hpp"

using namespace vesta;

namespace {

PixelGrid binary(int nx, int ny, std::initializer_list<PixelIndex> actives) {
    PixelGrid g(nx, ny);
    for (const auto& p : actives) g.set_value(p, 255.0);
    return g;
}

int total_points(const std::vector<Contour>& contours) {
    int n = 0;
    for (const auto& c : contours) n += c.length();
    return n;
}

}  // namespace

TEST_SUITE_BEGIN("diconex");

TEST_CASE("empty grid has no contours") {
    PixelGrid g(4, 3);
    CHECK(trace_contours(g, IsoConfig{1.0}).empty());
}

TEST_CASE("single pixel yields one four-point contour") {
    PixelGrid g = binary(3, 3, {{1, 1}});
    for (PoaMode mode : {PoaMode::disconnect, PoaMode::connect, PoaMode::mixed}) {
        ContourOptions o;
        o.mode = mode;
        auto cs = trace_contours(g, IsoConfig{100.0}, o);
        REQUIRE(cs.size() == 1);
        CHECK(cs[0].length() == 4);
        CHECK(contour_area(cs[0]) == 0.5);
    }
}

TEST_CASE("domino exposes six edges") {
    PixelGrid g = binary(2, 1, {{0, 0}, {1, 0}});
    auto cs = trace_contours(g, IsoConfig{100.0});
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].length() == 6);
    CHECK(contour_area(cs[0]) == 1.5);
}

TEST_CASE("diagonal pair splits or joins at the shared corner") {
    PixelGrid g = binary(2, 2, {{0, 0}, {1, 1}});
    IsoConfig iso{100.0};

    ContourOptions o;
    o.mode = PoaMode::disconnect;
    auto split = trace_contours(g, iso, o);
    REQUIRE(split.size() == 2);
    CHECK(split[0].length() == 4);
    CHECK(split[1].length() == 4);
    CHECK(contour_area(split[0]) + contour_area(split[1]) == 1.0);

    o.mode = PoaMode::connect;
    auto joined = trace_contours(g, iso, o);
    REQUIRE(joined.size() == 1);
    CHECK(joined[0].length() == 8);
    CHECK(contour_area(joined[0]) == 1.5);
}

TEST_CASE("holes wind clockwise") {
    PixelGrid g(3, 3);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x)
            if (x != 1 || y != 1) g.set_value({x, y}, 255.0);
    auto cs = trace_contours(g, IsoConfig{100.0});
    REQUIRE(cs.size() == 2);
    double outer = 0, inner = 0;
    for (const auto& c : cs) {
        double a = contour_area(c);
        if (a > 0)
            outer = a;
        else
            inner = a;
    }
    CHECK(outer == 8.5);
    CHECK(inner == -0.5);
}

TEST_CASE("mixed mode decides each corner by its average") {
    IsoConfig iso{150.0};
    ContourOptions o;
    o.mode = PoaMode::mixed;

    PixelGrid low(2, 2);
    low.set_value({0, 0}, 180.0);
    low.set_value({1, 1}, 180.0);
    low.set_value({1, 0}, 100.0);
    low.set_value({0, 1}, 100.0);
    // Corner average 140 stays below the isovalue: disconnect.
    CHECK(trace_contours(low, iso, o).size() == 2);

    PixelGrid high(2, 2);
    high.set_value({0, 0}, 200.0);
    high.set_value({1, 1}, 200.0);
    high.set_value({1, 0}, 120.0);
    high.set_value({0, 1}, 120.0);
    // Corner average 160 reaches the isovalue: connect.
    auto joined = trace_contours(high, iso, o);
    REQUIRE(joined.size() == 1);
    CHECK(joined[0].length() == 8);

    // An explicit threshold overrides the isovalue.
    o.mixed_threshold = 170.0;
    CHECK(trace_contours(high, iso, o).size() == 2);
}

TEST_CASE("corner average needs an interior corner") {
    PixelGrid g = binary(2, 2, {{0, 0}});
    CHECK(corner_average(g, {1, 1}) == 255.0 / 4.0);
    CHECK_THROWS_AS(corner_average(g, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(corner_average(g, {1, -1}), std::invalid_argument);
}

TEST_CASE("displacement slides points toward the isovalue") {
    PixelGrid g(2, 1);
    g.set_value({0, 0}, 133.0);
    IsoConfig iso{100.0};
    auto cs = trace_contours(g, iso);
    REQUIRE(cs.size() == 1);
    REQUIRE(cs[0].length() == 4);

    for (const auto& p : cs[0].points) {
        Vec2 fixed = contour_position(p, g, iso, false);
        Vec2 moved = contour_position(p, g, iso, true);
        if (p.id.x == 1 && p.id.y == 0) {
            // Interior edge toward the 0-valued pixel.
            CHECK(fixed.x == 0.5);
            CHECK(moved.x == 33.0 / 133.0);
            CHECK(moved.y == 0.0);
        } else {
            // Border edges have no opposite sample and stay in place.
            CHECK(moved.x == fixed.x);
            CHECK(moved.y == fixed.y);
        }
    }
}

TEST_CASE("contour points are conserved across modes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        PixelGrid g(9, 7);
        for (int y = 0; y < 7; ++y)
            for (int x = 0; x < 9; ++x)
                if (rng() & 1) g.set_value({x, y}, 255.0);
        IsoConfig iso{100.0};

        std::vector<std::vector<uint64_t>> keys_by_mode;
        for (PoaMode mode : {PoaMode::disconnect, PoaMode::connect, PoaMode::mixed}) {
            ContourOptions o;
            o.mode = mode;
            auto cs = trace_contours(g, iso, o);
            std::vector<uint64_t> keys;
            for (const auto& c : cs)
                for (const auto& p : c.points) keys.push_back(p.key());
            std::sort(keys.begin(), keys.end());
            // Every boundary edge appears in exactly one contour.
            CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
            keys_by_mode.push_back(std::move(keys));
        }
        CHECK(keys_by_mode[0] == keys_by_mode[1]);
        CHECK(keys_by_mode[0] == keys_by_mode[2]);
    }
}

TEST_CASE("contours are normalized and sorted") {
    PixelGrid g = binary(4, 4, {{0, 0}, {2, 2}, {3, 0}});
    auto cs = trace_contours(g, IsoConfig{100.0});
    REQUIRE(cs.size() == 3);
    for (size_t i = 0; i < cs.size(); ++i) {
        Contour copy = cs[i];
        copy.normalize();
        for (int k = 0; k < copy.length(); ++k)
            CHECK(copy.points[size_t(k)].key() == cs[i].points[size_t(k)].key());
        if (i > 0) CHECK(contour_less(cs[i - 1], cs[i]));
    }
}

TEST_CASE("layer slices map volume axes") {
    ScalarGrid g = vt::grid_of(3, 2, 2, {{1, 0, 1}, {2, 1, 0}});

    PixelGrid z1 = pixel_slice(g, 2, 1);
    CHECK(z1.nx() == 3);
    CHECK(z1.ny() == 2);
    CHECK(z1.value({1, 0}) == 255.0);
    CHECK(z1.value({2, 1}) == 0.0);

    PixelGrid x2 = pixel_slice(g, 0, 2);
    CHECK(x2.nx() == 2);  // y
    CHECK(x2.ny() == 2);  // z
    CHECK(x2.value({1, 0}) == 255.0);
    CHECK(x2.value({0, 1}) == 0.0);

    PixelGrid y0 = pixel_slice(g, 1, 0);
    CHECK(y0.nx() == 2);  // z
    CHECK(y0.ny() == 3);  // x
    CHECK(y0.value({1, 1}) == 255.0);
}

TEST_CASE("contour count matches exposed edges") {
    // One pixel has 4 exposed edges, a domino 6; points equal edges.
    PixelGrid one = binary(1, 1, {{0, 0}});
    CHECK(total_points(trace_contours(one, IsoConfig{100.0})) == 4);
    PixelGrid two = binary(2, 1, {{0, 0}, {1, 0}});
    CHECK(total_points(trace_contours(two, IsoConfig{100.0})) == 6);
}

TEST_SUITE_END();
