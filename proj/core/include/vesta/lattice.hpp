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

#include <cmath>
#include <cstdint>

namespace vesta {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

struct Vec2 {
    double x = 0.0, y = 0.0;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

// Integer lattice coordinates in half-voxel steps: the center of voxel
// (i, j, k) sits at lattice point (2i, 2j, 2k).  Parity classifies a point:
//
//   odd coordinates  kind of point
//   ---------------  -------------------------------------------
//   0                voxel center
//   1                voxel face center          (support points)
//   2                voxel edge midpoint        (junctures)
//   3                voxel corner
//
// All combinatorial identity in the library (point dedup, juncture lookup,
// cycle normalization) runs on these exact integer keys, never on floats.
struct LatticePoint {
    int32_t x = 0, y = 0, z = 0;

    bool operator==(const LatticePoint& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }

    int odd_count() const { return (x & 1) + (y & 1) + (z & 1); }

    // Packed key; supports coordinates in (-2^20, 2^20).
    uint64_t packed() const {
        constexpr int64_t bias = int64_t{1} << 20;
        return (uint64_t(uint32_t(x + bias)) << 42) | (uint64_t(uint32_t(y + bias)) << 21) |
               uint64_t(uint32_t(z + bias));
    }

    bool operator<(const LatticePoint& o) const { return packed() < o.packed(); }

    Vec3 world(const Vec3& spacing) const {
        return {0.5 * x * spacing.x, 0.5 * y * spacing.y, 0.5 * z * spacing.z};
    }
};

inline LatticePoint unpack_lattice(uint64_t key) {
    constexpr int64_t bias = int64_t{1} << 20;
    constexpr uint64_t mask = (uint64_t{1} << 21) - 1;
    return {int32_t(int64_t((key >> 42) & mask) - bias), int32_t(int64_t((key >> 21) & mask) - bias),
            int32_t(int64_t(key & mask) - bias)};
}

// Key for points that are not lattice points (the auxiliary cycle centroids
// of the high resolution tessellation).  The tag bit keeps them disjoint
// from every packed LatticePoint.
inline uint64_t centroid_key(uint64_t serial) { return (uint64_t{1} << 63) | serial; }
inline bool is_centroid_key(uint64_t key) { return (key >> 63) != 0; }

// 2D counterpart used by the contour extractor: pixel (i, j) center is (2i, 2j).
struct LatticePoint2 {
    int32_t x = 0, y = 0;

    bool operator==(const LatticePoint2& o) const { return x == o.x && y == o.y; }

    uint64_t packed() const {
        constexpr int64_t bias = int64_t{1} << 20;
        return (uint64_t(uint32_t(x + bias)) << 21) | uint64_t(uint32_t(y + bias));
    }

    // Ordered bottom-to-top first so contour starts are reproducible.
    bool operator<(const LatticePoint2& o) const {
        if (y != o.y) return y < o.y;
        return x < o.x;
    }

    Vec2 world(const Vec2& spacing) const { return {0.5 * x * spacing.x, 0.5 * y * spacing.y}; }
};

}  // namespace vesta
