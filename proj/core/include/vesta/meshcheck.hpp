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

#pragma once

#include <string>
#include <vector>

#include "vesta/cycle.hpp"
#include "vesta/mesh.hpp"

namespace vesta {

// Mesh diagnostics.  All checks operate on point identities, so they are
// stable under displacement; run them on a deduplicated mesh (validate()
// deduplicates a copy itself).

struct ValidationReport {
    size_t point_count = 0;
    size_t triangle_count = 0;
    size_t duplicate_points = 0;
    size_t degenerate_triangles = 0;
    size_t unmatched_edges = 0;
    uint32_t component_count = 0;
    std::vector<int64_t> euler;  // V - E + F per component
    double volume = 0;           // signed, in voxel units

    bool closed() const { return unmatched_edges == 0; }
    bool ok() const { return closed() && degenerate_triangles == 0; }
};

ValidationReport validate(const Mesh& m, const Vec3& spacing = {1, 1, 1});

std::string to_text(const ValidationReport& r);

// Directed edges without an antiparallel partner.  Zero on a watertight,
// consistently wound mesh.  Requires deduplicated point indices.
size_t count_unmatched_edges(const Mesh& m);

// Sum of signed tetrahedron volumes against the origin, divided by the
// voxel volume: positive for outward-wound closed surfaces, in units of
// enclosed voxels.
double signed_volume(const Mesh& m, const Vec3& spacing = {1, 1, 1});

// Cycle lengths the tracer can produce: 3..7 with a fixed ambiguity rule,
// plus 8, 9 and 12 when decisions mix per edge.
bool plausible_census(const CycleCensus& census, bool mixed);

// Pairs of triangles that share no point index but whose interiors
// properly intersect.  Exact on undisplaced meshes, where all coordinates
// are half-integers.  Touching contacts (shared boundary points or
// collinear edge overlap) do not count.
size_t count_self_intersections(const Mesh& m);

// Cross-section at the plane `axis = plane2` (doubled lattice coordinate).
// Collects the directed edges whose endpoints both lie in the plane, taken
// from triangles whose remaining corner lies on the positive side and from
// coplanar triangles winding toward the positive axis (pinched cycles lay
// flat patches into the plane; their interior edges cancel in antiparallel
// pairs), and chains them into closed loops.  Meaningful for low-resolution
// meshes, where in-plane edges carry lattice keys.
std::vector<std::vector<LatticePoint>> slice_mesh(const Mesh& m, int axis, int32_t plane2);

}  // namespace vesta
