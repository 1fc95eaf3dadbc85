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

#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "vesta/marching.hpp"
#include "vesta/synthetic.hpp"
#include "vesta/trace.hpp"

using namespace vesta;
using vt::cyclic_equal;
using vt::grid_of;

namespace {

std::vector<int> centers_of(const CellCycles& cc, int i) {
    std::vector<int> out;
    for (int k = 0; k < cc.length[i]; ++k) out.push_back(cc.entries[size_t(i)][size_t(k)].center);
    return out;
}

CellCycles cycles_with(uint8_t occ, PoaDecision d) {
    return cell_cycles(occ, [d](int) { return d; });
}

bool same_cycles(std::vector<SurfaceCycle> a, std::vector<SurfaceCycle> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end(), cycle_less);
    std::sort(b.begin(), b.end(), cycle_less);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].key_sequence() != b[i].key_sequence()) return false;
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("marching");

TEST_CASE("path table passes its own derivation check") {
    CHECK_NOTHROW(QuadrantPathTable::instance());
}

TEST_CASE("corner bits encode cell offsets") {
    CHECK(cell_corner_offset(0) == VoxelIndex{0, 0, 0});
    CHECK(cell_corner_offset(1) == VoxelIndex{1, 0, 0});
    CHECK(cell_corner_offset(2) == VoxelIndex{0, 1, 0});
    CHECK(cell_corner_offset(5) == VoxelIndex{1, 0, 1});
    CHECK(cell_corner_offset(7) == VoxelIndex{1, 1, 1});
}

TEST_CASE("edge table is consistent with its geometry") {
    for (int c = 0; c < 12; ++c) {
        const auto& corners = kCenterCorners[size_t(c)];
        const VoxelIndex lo = cell_corner_offset(corners[0]);
        const VoxelIndex hi = cell_corner_offset(corners[1]);
        // The two corners differ only along the edge axis.
        const int axis = kCenterAxis[size_t(c)];
        CHECK(((lo.x != hi.x) + (lo.y != hi.y) + (lo.z != hi.z)) == 1);
        CHECK((axis == 0 ? lo.x : axis == 1 ? lo.y : lo.z) == 0);
        CHECK((axis == 0 ? hi.x : axis == 1 ? hi.y : hi.z) == 1);
        // The stored midpoint is the mean of the corner positions.
        CHECK(kCenterOffset2[size_t(c)][0] == lo.x + hi.x);
        CHECK(kCenterOffset2[size_t(c)][1] == lo.y + hi.y);
        CHECK(kCenterOffset2[size_t(c)][2] == lo.z + hi.z);
    }
    // Each face center touches four edges, each edge two faces.
    int touches[12] = {};
    for (const auto& around : kJunctureCenters)
        for (int c : around) ++touches[c];
    for (int c = 0; c < 12; ++c) CHECK(touches[c] == 2);
}

TEST_CASE("lone corner cuts one triangle") {
    auto cc = cycles_with(0x80, PoaDecision::disconnect);
    REQUIRE(cc.count == 1);
    CHECK(cyclic_equal(centers_of(cc, 0), {9, 6, 11}));
    // The inverted cell flips the orientation.
    auto inv = cycles_with(uint8_t(~0x80), PoaDecision::disconnect);
    REQUIRE(inv.count == 1);
    CHECK(cyclic_equal(centers_of(inv, 0), {9, 11, 6}));
}

TEST_CASE("edge-sharing corners split or join") {
    // Corners 0, 1 and 7 active: one ambiguous face between 1 and 7.
    auto split = cycles_with(0x83, PoaDecision::disconnect);
    REQUIRE(split.count == 2);
    CHECK(cyclic_equal(centers_of(split, 0), {0, 5, 7, 3}));
    CHECK(cyclic_equal(centers_of(split, 1), {6, 11, 9}));

    auto joined = cycles_with(0x83, PoaDecision::connect);
    REQUIRE(joined.count == 1);
    CHECK(cyclic_equal(centers_of(joined, 0), {0, 5, 7, 11, 9, 6, 3}));
}

TEST_CASE("alternating corners produce four triangles either way") {
    auto dis = cycles_with(0x96, PoaDecision::disconnect);
    auto con = cycles_with(0x96, PoaDecision::connect);
    REQUIRE(dis.count == 4);
    REQUIRE(con.count == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(dis.length[i] == 3);
        CHECK(con.length[i] == 3);
    }
    // Disconnected triangles wrap the active corners, connected ones the
    // inactive corners in between.
    CHECK(cyclic_equal(centers_of(dis, 0), {0, 1, 4}));
    CHECK(cyclic_equal(centers_of(con, 2), {4, 8, 9}));
}

TEST_CASE("full and empty cells are silent") {
    CHECK(cycles_with(0x00, PoaDecision::disconnect).count == 0);
    CHECK(cycles_with(0xff, PoaDecision::connect).count == 0);
}

TEST_CASE("cycle lengths stay in the known families") {
    std::set<int> pure, mixed;
    int planar_sixes_max = 0;
    for (int occ = 0; occ < 256; ++occ) {
        for (unsigned pattern = 0; pattern < 64; ++pattern) {
            auto cc = cell_cycles(uint8_t(occ), [pattern](int j) {
                return (pattern >> (j - 12)) & 1 ? PoaDecision::connect
                                                 : PoaDecision::disconnect;
            });
            int planar_sixes = 0;
            for (int i = 0; i < cc.count; ++i) {
                mixed.insert(cc.length[i]);
                if (pattern == 0 || pattern == 63) pure.insert(cc.length[i]);
                if (cc.length[i] != 6) continue;
                // A hexagon in one plane has collinear opposite-midpoint
                // diagonals meeting in the cell center.
                auto centers = centers_of(cc, i);
                bool planar = true;
                const auto& p0 = kCenterOffset2[size_t(centers[0])];
                const auto& p1 = kCenterOffset2[size_t(centers[1])];
                const auto& p2 = kCenterOffset2[size_t(centers[2])];
                int n[3] = {(p1[1] - p0[1]) * (p2[2] - p0[2]) - (p1[2] - p0[2]) * (p2[1] - p0[1]),
                            (p1[2] - p0[2]) * (p2[0] - p0[0]) - (p1[0] - p0[0]) * (p2[2] - p0[2]),
                            (p1[0] - p0[0]) * (p2[1] - p0[1]) - (p1[1] - p0[1]) * (p2[0] - p0[0])};
                for (size_t k = 3; k < centers.size(); ++k) {
                    const auto& pk = kCenterOffset2[size_t(centers[k])];
                    int d = n[0] * (pk[0] - p0[0]) + n[1] * (pk[1] - p0[1]) +
                            n[2] * (pk[2] - p0[2]);
                    if (d != 0) planar = false;
                }
                if (planar) ++planar_sixes;
            }
            if (planar_sixes > planar_sixes_max) planar_sixes_max = planar_sixes;
        }
    }
    CHECK(pure == std::set<int>{3, 4, 5, 6, 7});
    CHECK(mixed == std::set<int>{3, 4, 5, 6, 7, 8, 9, 12});
    // Two coplanar hexagons never share a cell.
    CHECK(planar_sixes_max == 1);
}

TEST_CASE("cell sweep matches the whole-volume tracer") {
    IsoConfig iso{128.0};
    for (uint64_t seed : {21u, 22u, 23u}) {
        ScalarGrid bin = random_binary_volume(16, 16, 16, 0.5, seed);
        ScalarGrid gray = random_u8_volume(16, 16, 16, seed + 100);
        for (const ScalarGrid* g : {&bin, &gray}) {
            for (PoaMode mode : {PoaMode::disconnect, PoaMode::connect, PoaMode::mixed}) {
                TraceOptions to;
                to.mode = mode;
                MarchOptions mo;
                mo.mode = mode;
                CHECK(same_cycles(trace_cycles(*g, iso, to), scan_volume(*g, iso, mo)));
            }
        }
    }
}

TEST_CASE("slab partitioning does not change the result") {
    ScalarGrid g = random_binary_volume(12, 12, 33, 0.5, 77);
    IsoConfig iso{128.0};
    MarchOptions one;
    auto serial = scan_volume(g, iso, one);
    MarchOptions four;
    four.threads = 4;
    auto threaded = scan_volume(g, iso, four);
    CHECK(same_cycles(serial, threaded));
    CHECK(same_cycles(threaded, serial));
}

TEST_CASE("border voxels are enclosed by the halo scan") {
    // Active voxel in a domain corner: all six faces still appear.
    ScalarGrid g = grid_of(2, 2, 2, {{0, 0, 0}});
    auto cycles = scan_volume(g, IsoConfig{100.0});
    CHECK(cycles.size() == 8);
}

TEST_SUITE_END();
