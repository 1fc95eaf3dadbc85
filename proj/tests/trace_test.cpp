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

#include "doctest.h"
#include "helpers.hpp"
#include "vesta/synthetic.hpp"
#include "vesta/trace.hpp"

using namespace vesta;
using vt::census_text;
using vt::grid_of;

TEST_SUITE_BEGIN("trace");

TEST_CASE("single voxel exposes six faces") {
    ScalarGrid g = grid_of(1, 1, 1, {{0, 0, 0}});
    auto faces = collect_boundary_faces(g, IsoConfig{100.0});
    CHECK(faces.size() == 6);
    std::set<uint64_t> supports;
    for (const auto& f : faces) {
        CHECK(f.active == VoxelIndex{0, 0, 0});
        CHECK(f.border);
        supports.insert(f.support_point().packed());
    }
    CHECK(supports.size() == 6);
}

TEST_CASE("face junctures sit half a step from the face center") {
    BoundaryFace f;
    f.active = {0, 0, 0};
    f.axis = 0;
    f.sign = 1;
    // Support at doubled (1,0,0); slots walk +y, +z, -y, -z.
    CHECK(face_juncture(f, 0).packed() == LatticePoint{1, 1, 0}.packed());
    CHECK(face_juncture(f, 1).packed() == LatticePoint{1, 0, 1}.packed());
    CHECK(face_juncture(f, 2).packed() == LatticePoint{1, -1, 0}.packed());
    CHECK(face_juncture(f, 3).packed() == LatticePoint{1, 0, -1}.packed());

    // Opposite-facing faces swap the transverse axes to stay outward.
    f.sign = -1;
    CHECK(face_juncture(f, 0).packed() == LatticePoint{-1, 0, 1}.packed());
    CHECK(face_juncture(f, 1).packed() == LatticePoint{-1, 1, 0}.packed());
}

TEST_CASE("quadrant path slots compose the face perimeter") {
    for (int p = 0; p < 4; ++p) {
        CHECK(path_from_start_slot(path_start_slot(p)) == p);
        // Each path ends where the next one starts.
        CHECK(path_end_slot(p) == path_start_slot((p + 1) % 4));
    }
}

TEST_CASE("single voxel traces eight triangles") {
    ScalarGrid g = grid_of(1, 1, 1, {{0, 0, 0}});
    auto cycles = trace_cycles(g, IsoConfig{100.0});
    REQUIRE(cycles.size() == 8);
    CHECK(census_text(census_of(cycles)) == " 3:8");
    for (const auto& c : cycles) {
        CHECK(c.length() == 3);
        // Stored rotation is canonical.
        SurfaceCycle copy = c;
        copy.normalize();
        CHECK(copy.key_sequence() == c.key_sequence());
    }
    for (size_t i = 1; i < cycles.size(); ++i) CHECK(cycle_less(cycles[i - 1], cycles[i]));
}

TEST_CASE("value equal to the isovalue is enclosed") {
    ScalarGrid g = ScalarGrid::from_u8(1, 1, 1, {100});
    CHECK(trace_cycles(g, IsoConfig{100.0}).size() == 8);
    CHECK(trace_cycles(g, IsoConfig{101.0}).empty());
}

TEST_CASE("stacked pair merges along the shared face") {
    ScalarGrid g = grid_of(1, 1, 2, {{0, 0, 0}, {0, 0, 1}});
    CHECK(collect_boundary_faces(g, IsoConfig{100.0}).size() == 10);
    auto cycles = trace_cycles(g, IsoConfig{100.0});
    CHECK(census_text(census_of(cycles)) == " 3:8 4:4");
}

TEST_CASE("corner-touching pair stays two octahedra in every mode") {
    ScalarGrid g = grid_of(2, 2, 2, {{0, 0, 0}, {1, 1, 1}});
    for (PoaMode mode : {PoaMode::disconnect, PoaMode::connect, PoaMode::mixed}) {
        TraceOptions o;
        o.mode = mode;
        auto cycles = trace_cycles(g, IsoConfig{100.0}, o);
        CHECK(census_text(census_of(cycles)) == " 3:16");
    }
}

TEST_CASE("edge-touching pair obeys the ambiguity mode") {
    ScalarGrid g = grid_of(2, 2, 1, {{0, 0, 0}, {1, 1, 0}});
    IsoConfig iso{100.0};

    TraceOptions o;
    o.mode = PoaMode::disconnect;
    CHECK(census_text(census_of(trace_cycles(g, iso, o))) == " 3:16");

    o.mode = PoaMode::connect;
    CHECK(census_text(census_of(trace_cycles(g, iso, o))) == " 3:12 6:2");
}

TEST_CASE("ambiguity resolution uses the edge average") {
    IsoConfig iso{150.0};
    ScalarGrid low = ScalarGrid::from_u8(2, 2, 1, {180, 100, 100, 180});
    // Average 140 misses the isovalue.
    CHECK(resolve_poa(low, iso, {1, 1, 0}, PoaMode::mixed) == PoaDecision::disconnect);
    ScalarGrid high = ScalarGrid::from_u8(2, 2, 1, {200, 120, 120, 200});
    // Average 160 reaches it.
    CHECK(resolve_poa(high, iso, {1, 1, 0}, PoaMode::mixed) == PoaDecision::connect);
    // Explicit threshold wins over the isovalue.
    CHECK(resolve_poa(high, iso, {1, 1, 0}, PoaMode::mixed, 170.0) ==
          PoaDecision::disconnect);
    // Fixed modes ignore the field.
    CHECK(resolve_poa(low, iso, {1, 1, 0}, PoaMode::connect) == PoaDecision::connect);
    CHECK(resolve_poa(low, iso, {1, 1, 0}, PoaMode::disconnect) == PoaDecision::disconnect);

    TraceOptions o;
    o.mode = PoaMode::mixed;
    CHECK(census_text(census_of(trace_cycles(low, iso, o))) == " 3:16");
    CHECK(census_text(census_of(trace_cycles(high, iso, o))) == " 3:12 6:2");
}

TEST_CASE("full block wraps as one closed surface") {
    ScalarGrid g = grid_of(2, 2, 2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                                     {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
    auto cycles = trace_cycles(g, IsoConfig{100.0});
    CHECK(census_text(census_of(cycles)) == " 3:8 4:18");
    std::set<uint64_t> supports;
    for (const auto& c : cycles)
        for (const auto& p : c.points) supports.insert(p.key());
    CHECK(supports.size() == 24);
}

TEST_CASE("every quadrant path is consumed exactly once") {
    for (uint64_t seed : {3u, 4u, 5u}) {
        ScalarGrid g = random_binary_volume(8, 8, 8, 0.5, seed);
        IsoConfig iso{128.0};
        const size_t paths = 4 * collect_boundary_faces(g, iso).size();
        for (PoaMode mode : {PoaMode::disconnect, PoaMode::connect, PoaMode::mixed}) {
            TraceOptions o;
            o.mode = mode;
            size_t total = 0;
            for (const auto& c : trace_cycles(g, iso, o)) total += size_t(c.length());
            CHECK(total == paths);
        }
    }
}

TEST_SUITE_END();
