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

#include "vesta/grid.hpp"
#include "vesta/lattice.hpp"

namespace vesta {

// 2D contour extraction over a pixel grid: the planar counterpart of the
// volume tracer.  Every edge between an active and an inactive pixel
// contributes one directed contour vector whose active pixel lies on its
// left, so material regions come out counterclockwise (positive area) and
// holes clockwise.  Ambiguous corners (diagonally adjacent active pixels)
// follow the same keep-active / keep-inactive rule as the 3D tracer.

struct PixelIndex {
    int32_t x = 0, y = 0;

    bool operator==(const PixelIndex& o) const { return x == o.x && y == o.y; }

    LatticePoint2 lattice() const { return {2 * x, 2 * y}; }
};

class PixelGrid {
  public:
    PixelGrid(int nx, int ny, const Vec2& spacing = {1, 1});

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    const Vec2& spacing() const { return spacing_; }

    bool in_domain(const PixelIndex& p) const {
        return p.x >= 0 && p.y >= 0 && p.x < nx_ && p.y < ny_;
    }

    double value(const PixelIndex& p) const { return values_[size_t(p.y) * size_t(nx_) + size_t(p.x)]; }
    void set_value(const PixelIndex& p, double v) {
        values_[size_t(p.y) * size_t(nx_) + size_t(p.x)] = v;
    }

  private:
    int nx_, ny_;
    Vec2 spacing_;
    std::vector<double> values_;
};

inline bool is_active(const PixelGrid& g, const IsoConfig& iso, const PixelIndex& p) {
    return g.in_domain(p) && g.value(p) >= iso.isovalue;
}

// Cross-section of a volume: the 2D grid of voxel values at `layer` along
// `axis`, with the remaining axes in cyclic order as (x, y).
PixelGrid pixel_slice(const ScalarGrid& g, int axis, int32_t layer);

// Range of a contour vector: from the active pixel toward the inactive
// side.  The traversal direction is the range rotated a quarter turn
// counterclockwise.
struct Range2 {
    PixelIndex active;
    uint8_t axis = 0;
    int8_t sign = 1;
    bool border = false;

    PixelIndex inactive() const {
        PixelIndex p = active;
        (axis == 0 ? p.x : p.y) += sign;
        return p;
    }

    // Edge midpoint: the support point of this vector.
    LatticePoint2 support_point() const {
        LatticePoint2 p = active.lattice();
        (axis == 0 ? p.x : p.y) += sign;
        return p;
    }
};

struct ContourPoint {
    LatticePoint2 id;
    Range2 range;

    uint64_t key() const { return id.packed(); }
};

struct Contour {
    std::vector<ContourPoint> points;

    int length() const { return static_cast<int>(points.size()); }

    // Rotates to the lexicographically smallest key sequence.
    void normalize();
};

bool contour_less(const Contour& a, const Contour& b);

struct ContourOptions {
    PoaMode mode = PoaMode::disconnect;
    // Threshold for the corner average in mixed mode; the isovalue when unset.
    std::optional<double> mixed_threshold;
};

// All contours of the active region, each normalized, sorted canonically.
std::vector<Contour> trace_contours(const PixelGrid& g, const IsoConfig& iso,
                                    const ContourOptions& options = {});

// Mean of the four pixels around a corner point (both coordinates odd).
// Throws if any of them is outside the domain.
double corner_average(const PixelGrid& g, const LatticePoint2& corner);

// World position of a contour point, optionally displaced along its range
// by inverse interpolation.  Border points stay at the edge midpoint.
Vec2 contour_position(const ContourPoint& p, const PixelGrid& g, const IsoConfig& iso,
                      bool displace);

// Shoelace area over the undisplaced support polygon, in pixel units:
// positive for material contours, negative for holes.
double contour_area(const Contour& c);

}  // namespace vesta
