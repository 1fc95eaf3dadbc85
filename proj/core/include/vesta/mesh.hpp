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

#include <cstdint>
#include <vector>

#include "vesta/lattice.hpp"

namespace vesta {

// Indexed triangle soup.  Every point carries the packed lattice key of the
// half-step point it came from (or a synthetic centroid key), so meshes can
// be compared, deduplicated, and sliced exactly on integer identities even
// after the positions have been displaced.
struct MeshPoint {
    uint64_t key;
    Vec3 pos;
};

struct Triangle {
    uint32_t a, b, c;
};

struct Mesh {
    std::vector<MeshPoint> points;
    std::vector<Triangle> triangles;
    // Index of the cycle (or cell) each triangle came from; same length as
    // triangles, or empty when the producer does not track sources.
    std::vector<uint32_t> triangle_source;

    size_t point_count() const { return points.size(); }
    size_t triangle_count() const { return triangles.size(); }
};

// Merges points that share a key, keeping the first occurrence of each key
// and remapping triangle indices.  Positions of merged duplicates are
// expected to be identical; the first one wins.
[[nodiscard]] Mesh dedup_points(const Mesh& m);

// Removes triangles whose corners span zero area (repeated indices,
// coincident positions, or exactly collinear positions).  Returns the
// number of triangles removed.  Unreferenced points are kept.
size_t drop_degenerate_triangles(Mesh& m);

// Labels connected components over shared point indices.  Returns one label
// per triangle, numbered 0..count-1 in order of first appearance.  Run on a
// deduplicated mesh; duplicate keys count as distinct points here.
std::vector<uint32_t> label_components(const Mesh& m, uint32_t* count = nullptr);

}  // namespace vesta
