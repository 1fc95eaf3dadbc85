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

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "vesta/diconex.hpp"
#include "vesta/meshcheck.hpp"
#include "vesta/tessellate.hpp"
#include "vesta/trace.hpp"

using namespace vesta;
using vt::grid_of;

namespace {

Mesh octahedron(bool displace = false) {
    ScalarGrid g = grid_of(1, 1, 1, {{0, 0, 0}});
    IsoConfig iso{100.0};
    TessellateOptions o;
    o.displace = displace;
    return tessellate(trace_cycles(g, iso), g, iso, o);
}

}  // namespace

TEST_SUITE_BEGIN("meshcheck");

TEST_CASE("octahedron validates clean") {
    ValidationReport r = validate(octahedron());
    CHECK(r.point_count == 6);
    CHECK(r.triangle_count == 8);
    CHECK(r.duplicate_points == 0);
    CHECK(r.degenerate_triangles == 0);
    CHECK(r.unmatched_edges == 0);
    CHECK(r.component_count == 1);
    REQUIRE(r.euler.size() == 1);
    CHECK(r.euler[0] == 2);
    CHECK(std::abs(r.volume - 1.0 / 6.0) <= 1e-12);
    CHECK(r.closed());
    CHECK(r.ok());
    CHECK(to_text(r).find("closed: yes") != std::string::npos);
}

TEST_CASE("removing a triangle opens three edges") {
    Mesh m = octahedron();
    m.triangles.pop_back();
    if (!m.triangle_source.empty()) m.triangle_source.pop_back();
    CHECK(count_unmatched_edges(m) == 3);
    ValidationReport r = validate(m);
    CHECK_FALSE(r.closed());
    CHECK(to_text(r).find("closed: no") != std::string::npos);
}

TEST_CASE("winding reversal negates the signed volume") {
    Mesh m = octahedron();
    const double v = signed_volume(m);
    for (auto& t : m.triangles) std::swap(t.b, t.c);
    CHECK(signed_volume(m) == -v);
}

TEST_CASE("signed volume counts voxels regardless of spacing") {
    ScalarGrid g = grid_of(1, 1, 1, {{0, 0, 0}});
    g.set_spacing({2.0, 3.0, 4.0});
    IsoConfig iso{100.0};
    TessellateOptions o;
    o.displace = false;
    Mesh m = tessellate(trace_cycles(g, iso), g, iso, o);
    CHECK(std::abs(signed_volume(m, g.spacing()) - 1.0 / 6.0) <= 1e-12);
}

TEST_CASE("components are counted separately") {
    ScalarGrid g = grid_of(3, 1, 1, {{0, 0, 0}, {2, 0, 0}});
    IsoConfig iso{100.0};
    TessellateOptions o;
    o.displace = false;
    Mesh m = tessellate(trace_cycles(g, iso), g, iso, o);
    ValidationReport r = validate(m);
    CHECK(r.component_count == 2);
    REQUIRE(r.euler.size() == 2);
    CHECK(r.euler[0] == 2);
    CHECK(r.euler[1] == 2);
    CHECK(std::abs(r.volume - 1.0 / 3.0) <= 1e-12);

    uint32_t count = 0;
    auto labels = label_components(m, &count);
    CHECK(count == 2);
    CHECK(labels.size() == m.triangle_count());
}

TEST_CASE("duplicate points are reported but not fatal to closure") {
    ScalarGrid g = grid_of(1, 1, 1, {{0, 0, 0}});
    IsoConfig iso{100.0};
    TessellateOptions o;
    o.displace = false;
    o.indexing = PointIndexing::per_cycle;
    Mesh m = tessellate(trace_cycles(g, iso), g, iso, o);
    ValidationReport r = validate(m);
    CHECK(r.duplicate_points == 24 - 6);
    CHECK(r.closed());
}

TEST_CASE("degenerate triangles are flagged and droppable") {
    Mesh m = octahedron();
    // Repeated corner index.
    m.triangles.push_back({0, 0, 1});
    // Exactly collinear corners.
    const uint32_t n = uint32_t(m.points.size());
    m.points.push_back({centroid_key(900), {10.0, 0.0, 0.0}});
    m.points.push_back({centroid_key(901), {11.0, 0.0, 0.0}});
    m.points.push_back({centroid_key(902), {12.0, 0.0, 0.0}});
    m.triangles.push_back({n, n + 1, n + 2});
    m.triangle_source.clear();

    ValidationReport r = validate(m);
    CHECK(r.degenerate_triangles == 2);
    CHECK_FALSE(r.ok());

    CHECK(drop_degenerate_triangles(m) == 2);
    CHECK(m.triangle_count() == 8);
    CHECK(validate(m).degenerate_triangles == 0);
}

TEST_CASE("deduplication is idempotent and preserves structure") {
    ScalarGrid g = grid_of(2, 2, 1, {{0, 0, 0}, {1, 1, 0}});
    IsoConfig iso{100.0};
    TessellateOptions o;
    o.indexing = PointIndexing::per_cycle;
    Mesh raw = tessellate(trace_cycles(g, iso), g, iso, o);
    Mesh once = dedup_points(raw);
    Mesh twice = dedup_points(once);
    CHECK(once.point_count() < raw.point_count());
    CHECK(once.point_count() == twice.point_count());
    CHECK(once.triangle_count() == raw.triangle_count());
    CHECK(signed_volume(once) == signed_volume(raw));
    CHECK(count_unmatched_edges(once) == 0);
}

TEST_CASE("census plausibility") {
    CHECK(plausible_census(CycleCensus{{3, 8}, {4, 18}}, false));
    CHECK(plausible_census(CycleCensus{{3, 1}, {7, 2}}, false));
    CHECK_FALSE(plausible_census(CycleCensus{{8, 1}}, false));
    CHECK(plausible_census(CycleCensus{{8, 1}, {9, 1}, {12, 1}}, true));
    CHECK_FALSE(plausible_census(CycleCensus{{10, 1}}, true));
    CHECK_FALSE(plausible_census(CycleCensus{{11, 1}}, true));
    CHECK_FALSE(plausible_census(CycleCensus{{2, 1}}, false));
    CHECK_FALSE(plausible_census(CycleCensus{{13, 1}}, true));
}

TEST_CASE("self intersection scan") {
    CHECK(count_self_intersections(octahedron()) == 0);

    // Two triangles piercing each other, sharing no point.
    Mesh bad;
    bad.points = {{1, {0.0, 0.0, 0.0}}, {2, {4.0, 0.0, 0.0}}, {3, {0.0, 4.0, 0.0}},
                  {4, {1.0, 1.0, -1.0}}, {5, {1.0, 1.0, 1.0}}, {6, {3.0, 3.0, 1.0}}};
    bad.triangles = {{0, 1, 2}, {3, 4, 5}};
    CHECK(count_self_intersections(bad) == 1);

    // Touching at a single shared position is not an intersection.
    Mesh touch;
    touch.points = {{1, {0.0, 0.0, 0.0}}, {2, {1.0, 0.0, 0.0}}, {3, {0.0, 1.0, 0.0}},
                    {4, {0.0, 0.0, 0.0}}, {5, {-1.0, 0.0, 1.0}}, {6, {-1.0, -1.0, 1.0}}};
    touch.triangles = {{0, 1, 2}, {3, 4, 5}};
    CHECK(count_self_intersections(touch) == 0);

    // Adjacent triangles sharing an edge index pair are skipped.
    Mesh quad;
    quad.points = {{1, {0.0, 0.0, 0.0}}, {2, {1.0, 0.0, 0.0}}, {3, {1.0, 1.0, 0.0}},
                   {4, {0.0, 1.0, 0.0}}};
    quad.triangles = {{0, 1, 2}, {0, 2, 3}};
    CHECK(count_self_intersections(quad) == 0);
}

TEST_CASE("mesh slices match layer contours") {
    ScalarGrid g = grid_of(4, 3, 1, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {3, 2, 0}});
    IsoConfig iso{100.0};
    TessellateOptions to;
    to.displace = false;
    Mesh m = tessellate(trace_cycles(g, iso), g, iso, to);

    auto loops = slice_mesh(m, 2, 0);
    auto contours = trace_contours(pixel_slice(g, 2, 0), iso);
    REQUIRE(loops.size() == contours.size());

    std::vector<uint64_t> from_mesh, from_layer;
    for (const auto& loop : loops)
        for (const auto& p : loop) from_mesh.push_back(LatticePoint2{p.x, p.y}.packed());
    for (const auto& c : contours)
        for (const auto& p : c.points) from_layer.push_back(p.id.packed());
    std::sort(from_mesh.begin(), from_mesh.end());
    std::sort(from_layer.begin(), from_layer.end());
    CHECK(from_mesh == from_layer);
}

TEST_SUITE_END();
