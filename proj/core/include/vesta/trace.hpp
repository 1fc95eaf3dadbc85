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

#include <optional>
#include <vector>

#include "vesta/cycle.hpp"
#include "vesta/grid.hpp"

namespace vesta {

// A boundary face separates an active voxel from an inactive 6-neighbor.
// Its four edge midpoints (junctures) and its center carry the directed
// quadrant paths that the tracer stitches into surface cycles.
//
// Juncture numbering about the range vector r (right-hand rule, so the
// slots run counterclockwise seen from the inactive side):
//
//           J2 (+v')
//            |
//   J3 ---- center ---- J1 (+u')      with  e_u' x e_v' = r
//            |
//           J4 (-v')
//
// The face-internal quadrant paths are J4->J3, J3->J2, J2->J1 and J1->J4,
// each passing through the face center.  This fixed sense is what makes
// every traced cycle wind with outward-facing normals.
using BoundaryFace = RangeVector;

// Slot s in 0..3 addresses J1..J4.  Offsets are one lattice half-step.
LatticePoint face_juncture(const BoundaryFace& f, int slot);

// Quadrant path p in 0..3 (J4->J3, J3->J2, J2->J1, J1->J4).
inline int path_start_slot(int p) { return (3 - p) & 3; }
inline int path_end_slot(int p) { return (2 - p) & 3; }
// Path leaving a given juncture slot.
inline int path_from_start_slot(int s) { return 3 - s; }

struct TraceOptions {
    PoaMode mode = PoaMode::disconnect;
    // Mixed-mode threshold for the edge average; defaults to the isovalue.
    std::optional<double> mixed_threshold;
};

// All boundary faces of the active region, in deterministic scan order
// (z, y, x ascending; -x, +x, -y, +y, -z, +z per voxel).
std::vector<BoundaryFace> collect_boundary_faces(const ScalarGrid& g, const IsoConfig& iso);

// Connectivity decision for the point of ambiguity at `juncture`.  Throws
// when the lattice edge is not ambiguous under the given isovalue.
PoaDecision resolve_poa(const ScalarGrid& g, const IsoConfig& iso, const LatticePoint& juncture,
                        PoaMode mode, std::optional<double> mixed_threshold = {});

// Whole-volume cycle tracer.  Walks the quadrant paths of all boundary
// faces, linking across faces at each juncture (the unique partner face at
// ordinary junctures, the mode's choice at ambiguous ones) until every path
// is consumed exactly once.  Junctures are dropped from the result: a cycle
// is the closed sequence of support points it visits.  Output is sorted by
// normalized key sequence, so equal surfaces compare equal structurally.
std::vector<SurfaceCycle> trace_cycles(const ScalarGrid& g, const IsoConfig& iso,
                                       const TraceOptions& options = {});

}  // namespace vesta
