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
#include <map>
#include <vector>

#include "vesta/grid.hpp"

namespace vesta {

// A surface cycle visits one support point per boundary face it crosses.
// Each entry carries the face identity so displacement can look up the two
// voxel values later.
struct SupportPoint {
    LatticePoint id;  // face center, exactly one odd coordinate
    RangeVector range;

    uint64_t key() const { return id.packed(); }
};

// Closed, directed loop of support points.  Traversal order encodes the
// surface orientation: the enclosed (active) region lies so that the
// decomposed triangles get outward normals.  Cycles are stored rotated to
// their lexicographically smallest key sequence, which makes output from
// the two tracing engines directly comparable.
struct SurfaceCycle {
    std::vector<SupportPoint> points;
    // Tessellation group: engines that emit per-cell geometry use this to
    // scope point reuse (0 for the whole-volume tracer).
    uint32_t group = 0;

    int length() const { return int(points.size()); }

    void normalize();

    std::vector<uint64_t> key_sequence() const;
};

// Orders cycles by their normalized key sequences (shorter prefix first).
bool cycle_less(const SurfaceCycle& a, const SurfaceCycle& b);

// Histogram of cycle lengths.
using CycleCensus = std::map<int, long>;

CycleCensus census_of(const std::vector<SurfaceCycle>& cycles);

}  // namespace vesta
