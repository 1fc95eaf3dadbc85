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
#include <functional>
#include <vector>

#include "vesta/cycle.hpp"
#include "vesta/grid.hpp"
#include "vesta/trace.hpp"

namespace vesta {

// Cell-local marching extractor.  A cell is the 2x2x2 voxel neighborhood
// based at voxel (i, j, k); every surface cycle is confined to one cell, so
// the volume can be swept cell by cell with no global juncture bookkeeping.
//
// Cell corner numbering (voxel v sits at base + corner offset; bit 0 = x,
// bit 1 = y, bit 2 = z):
//
//         6-------------7
//        /|            /|          z
//       / |           / |          |  y
//      4-------------5  |          | /
//      |  |          |  |          |/
//      |  2----------|--3          o------ x
//      | /           | /
//      |/            |/
//      0-------------1
//
// Support point centers 0..11 are the midpoints of the twelve corner-pair
// edges, junctures 12..17 are the six cell face centers:
//
//   center  corners  position      center  corners  position
//   0       0-2      (0, .5, 0)    6       3-7      (1, 1, .5)
//   1       2-3      (.5, 1, 0)    7       1-5      (1, 0, .5)
//   2       0-1      (.5, 0, 0)    8       4-6      (0, .5, 1)
//   3       1-3      (1, .5, 0)    9       6-7      (.5, 1, 1)
//   4       2-6      (0, 1, .5)    10      4-5      (.5, 0, 1)
//   5       0-4      (0, 0, .5)    11      5-7      (1, .5, 1)
//
//   juncture  face    position       adjacent centers
//   12        z = 0   (.5, .5, 0)    0, 1, 2, 3
//   13        x = 0   (0, .5, .5)    0, 4, 5, 8
//   14        y = 1   (.5, 1, .5)    1, 4, 6, 9
//   15        y = 0   (.5, 0, .5)    2, 5, 7, 10
//   16        x = 1   (1, .5, .5)    3, 6, 7, 11
//   17        z = 1   (.5, .5, 1)    8, 9, 10, 11
//
// Each boundary face between two cell corners contributes exactly one
// directed quadrant path inside the cell, running juncture -> center ->
// juncture.  The direction depends on which corner is active; the table
// below pins both variants per center and is checked at startup against
// the face-quadrant convention of the whole-volume tracer.

inline constexpr std::array<std::array<int, 2>, 12> kCenterCorners = {{
    {0, 2}, {2, 3}, {0, 1}, {1, 3}, {2, 6}, {0, 4},
    {3, 7}, {1, 5}, {4, 6}, {6, 7}, {4, 5}, {5, 7},
}};

inline constexpr std::array<int, 12> kCenterAxis = {1, 0, 0, 1, 2, 2, 2, 2, 1, 0, 0, 1};

// Doubled (half-step) cell-local coordinates.
inline constexpr std::array<std::array<int, 3>, 12> kCenterOffset2 = {{
    {0, 1, 0}, {1, 2, 0}, {1, 0, 0}, {2, 1, 0}, {0, 2, 1}, {0, 0, 1},
    {2, 2, 1}, {2, 0, 1}, {0, 1, 2}, {1, 2, 2}, {1, 0, 2}, {2, 1, 2},
}};

inline constexpr std::array<std::array<int, 3>, 6> kJunctureOffset2 = {{
    {1, 1, 0}, {0, 1, 1}, {1, 2, 1}, {1, 0, 1}, {2, 1, 1}, {1, 1, 2},
}};

inline constexpr std::array<std::array<int, 4>, 6> kJunctureCenters = {{
    {0, 1, 2, 3}, {0, 4, 5, 8}, {1, 4, 6, 9}, {2, 5, 7, 10}, {3, 6, 7, 11}, {8, 9, 10, 11},
}};

inline VoxelIndex cell_corner_offset(int corner) {
    return {corner & 1, (corner >> 1) & 1, (corner >> 2) & 1};
}

// The 24 directed in-cell quadrant paths, two per center.  The plus rows
// are frozen reference data; the minus path of a center is always the
// reversed plus path.  Orientation follows the active side of the face:
// side 0 means the corner with the lower coordinate along the face axis is
// active.
class QuadrantPathTable {
  public:
    struct Path {
        uint8_t entry;  // juncture id 12..17
        uint8_t exit;
    };

    static const QuadrantPathTable& instance();

    Path path(int center, bool plus) const;

    // Path taken when the given side of the face is the active one.
    Path side_path(int center, int active_side) const {
        return path(center, side_is_plus_[center][active_side]);
    }

    bool side_is_plus(int center, int active_side) const {
        return side_is_plus_[center][active_side];
    }

  private:
    QuadrantPathTable();

    std::array<Path, 12> plus_;
    std::array<std::array<bool, 2>, 12> side_is_plus_;
};

// One traced cell: at most four cycles of at most twelve entries.
struct CellPathRef {
    uint8_t center;
    uint8_t active_side;
};

struct CellCycles {
    int count = 0;
    std::array<int, 4> length{};
    std::array<std::array<CellPathRef, 12>, 4> entries{};
};

// Traces the cycles of a single cell occupancy (bit b set = corner b
// active).  The resolver is consulted once per ambiguous juncture (id
// 12..17) and must be a pure function of the underlying lattice edge so
// that neighboring cells agree.
CellCycles cell_cycles(uint8_t occupancy,
                       const std::function<PoaDecision(int juncture)>& resolver);

struct MarchOptions {
    PoaMode mode = PoaMode::disconnect;
    std::optional<double> mixed_threshold;
    int threads = 1;
};

// Sweeps all (nx+1)(ny+1)(nz+1) cell positions (one voxel of halo so the
// domain border is closed off) in z, y, x ascending order and returns every
// cell's cycles with group set to the cell's scan serial.  The sweep may be
// partitioned across threads; results are merged in scan order, so output
// is bit-identical for any thread count.
std::vector<SurfaceCycle> scan_volume(const ScalarGrid& g, const IsoConfig& iso,
                                      const MarchOptions& options = {});

}  // namespace vesta
