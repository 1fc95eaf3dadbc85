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

#include <vector>

#include "vesta/cycle.hpp"
#include "vesta/grid.hpp"
#include "vesta/mesh.hpp"

namespace vesta {

// Low resolution fans each N-cycle into N-2 triangles from its smallest-key
// support point.  High resolution keeps triangles as they are but splits
// every longer cycle into N triangles around the cycle centroid, adding one
// point per split cycle.
enum class Resolution : uint8_t {
    low,
    high,
};

// How often a support point is emitted before deduplication.  All policies
// produce the same surface; they differ only in the point table.
//   shared    - one entry per distinct half-step point (minimal table)
//   per_cycle - each cycle gets private copies of its support points
//   per_triangle - three fresh points per triangle
enum class PointIndexing : uint8_t {
    shared,
    per_cycle,
    per_triangle,
};

struct TessellateOptions {
    Resolution resolution = Resolution::low;
    // Move support points along their range vectors by inverse-interpolating
    // the scalar field; domain-border points stay at the face midpoint.
    bool displace = false;
    PointIndexing indexing = PointIndexing::shared;
};

// Triangle enumeration is canonical: within a cycle, triangles are listed
// in an order that depends only on the undirected cycle, and the winding
// follows the cycle direction.  Building a mesh from reversed cycles
// therefore yields the same triangles in the same order with opposite
// winding, and all area vectors negate exactly.
//
// Cycles must be normalized (SurfaceCycle::normalize) and free of
// duplicates; both extractors emit them this way.  Centroid points of split
// cycles are keyed by the cycle's rank in canonical order, so independently
// produced but equal cycle sets agree on every key.
Mesh tessellate(const std::vector<SurfaceCycle>& cycles, const ScalarGrid& g,
                const IsoConfig& iso, const TessellateOptions& options = {});

// World position of one support point, displaced or not.  Exposed for tests
// and the contour writer.
Vec3 support_position(const SupportPoint& p, const ScalarGrid& g, const IsoConfig& iso,
                      bool displace);

// Half the cross product of the edge vectors: the area-weighted normal.
inline Vec3 triangle_area_vector(const Vec3& a, const Vec3& b, const Vec3& c) {
    return cross(b - a, c - a) * 0.5;
}

// Sum of all triangle area vectors in triangle order.
Vec3 mesh_area_vector_sum(const Mesh& m);

}  // namespace vesta
