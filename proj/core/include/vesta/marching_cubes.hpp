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

#include <array>
#include <vector>

#include "vesta/cycle.hpp"
#include "vesta/grid.hpp"
#include "vesta/mesh.hpp"

namespace vesta {

// Reference marching-cubes extractor over the same cell sweep as the
// cell-based tracer, in two flavors:
//
//   classic15  the original 15-template table, where an occupancy with more
//              than half its corners active reuses the complementary
//              template with reversed winding.  On cells whose shared face
//              is ambiguous this picks mismatched diagonals and tears holes.
//   extended   the full 256-entry table; complementary occupancies get
//              complementary boundaries, and the per-cell triangle boundary
//              equals the cycle tracer's disconnect-mode perimeter exactly.
//
// The embedded table uses a widely circulated corner/edge numbering; the
// translation into this library's cell ids, the occupancy bit sense, and
// the winding are locked in at first use by checking all 256 boundaries
// against the cycle tracer.  A mismatch aborts rather than produce a
// subtly different surface.
enum class McVariant : uint8_t {
    classic15,
    extended,
};

// Triangles of one cell in local center ids (corner pairs of marching.hpp).
struct McCellTriangles {
    int count = 0;
    std::array<std::array<uint8_t, 3>, 5> tri{};
};

McCellTriangles mc_cell_triangles(uint8_t occupancy, McVariant variant);

struct McResult {
    // Per-cell boundary loops of the emitted triangles, as cycles over
    // support points: the census-comparable view of the MC output.
    std::vector<SurfaceCycle> cell_boundaries;
    // Triangle soup with three fresh points per triangle, keyed by lattice
    // ids like every other mesh here.
    Mesh mesh;
};

McResult marching_cubes(const ScalarGrid& g, const IsoConfig& iso, McVariant variant,
                        bool displace = true);

}  // namespace vesta
