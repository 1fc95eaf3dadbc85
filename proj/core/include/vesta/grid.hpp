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
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vesta/lattice.hpp"

namespace vesta {

enum class ValueKind : uint8_t { u8, u16, f32 };

struct VoxelIndex {
    int32_t x = 0, y = 0, z = 0;

    bool operator==(const VoxelIndex& o) const { return x == o.x && y == o.y && z == o.z; }

    LatticePoint lattice() const { return {2 * x, 2 * y, 2 * z}; }
};

struct IsoConfig {
    double isovalue = 0.0;
};

// Uniform scalar field sampled at voxel centers.  Voxel (i, j, k) has its
// center at world position (i*sx, j*sy, k*sz); storage is x-fastest.
class ScalarGrid {
  public:
    ScalarGrid() = default;
    ScalarGrid(int nx, int ny, int nz, ValueKind kind, Vec3 spacing = {1.0, 1.0, 1.0});

    static ScalarGrid from_u8(int nx, int ny, int nz, std::vector<uint8_t> data,
                              Vec3 spacing = {1.0, 1.0, 1.0});
    static ScalarGrid from_u16(int nx, int ny, int nz, std::vector<uint16_t> data,
                               Vec3 spacing = {1.0, 1.0, 1.0});
    static ScalarGrid from_f32(int nx, int ny, int nz, std::vector<float> data,
                               Vec3 spacing = {1.0, 1.0, 1.0});

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    size_t voxel_count() const { return size_t(nx_) * ny_ * nz_; }
    ValueKind kind() const { return kind_; }
    const Vec3& spacing() const { return spacing_; }
    void set_spacing(const Vec3& s) { spacing_ = s; }

    bool in_domain(const VoxelIndex& v) const {
        return v.x >= 0 && v.x < nx_ && v.y >= 0 && v.y < ny_ && v.z >= 0 && v.z < nz_;
    }

    size_t linear(const VoxelIndex& v) const {
        return (size_t(v.z) * ny_ + v.y) * nx_ + v.x;
    }

    double value(const VoxelIndex& v) const {
        size_t i = linear(v);
        switch (kind_) {
            case ValueKind::u8:
                return u8_[i];
            case ValueKind::u16:
                return u16_[i];
            default:
                return f32_[i];
        }
    }

    void set_value(const VoxelIndex& v, double val);

    const std::vector<uint8_t>& u8_data() const { return u8_; }
    const std::vector<uint16_t>& u16_data() const { return u16_; }
    const std::vector<float>& f32_data() const { return f32_; }

  private:
    int nx_ = 0, ny_ = 0, nz_ = 0;
    ValueKind kind_ = ValueKind::u8;
    Vec3 spacing_{1.0, 1.0, 1.0};
    std::vector<uint8_t> u8_;
    std::vector<uint16_t> u16_;
    std::vector<float> f32_;
};

// Activity rule: a voxel is active when its value is >= the isovalue.
// Out-of-domain voxels are always inactive, so every object is closed off
// by boundary faces at the domain border.
inline bool is_active(const ScalarGrid& g, const IsoConfig& iso, const VoxelIndex& v) {
    return g.in_domain(v) && g.value(v) >= iso.isovalue;
}

// Precomputed activity bits, shared by the extraction engines.  Queries
// outside the domain return false.
class ActivityMask {
  public:
    ActivityMask() = default;
    ActivityMask(const ScalarGrid& g, const IsoConfig& iso);

    bool active(int x, int y, int z) const {
        if (x < 0 || x >= nx_ || y < 0 || y >= ny_ || z < 0 || z >= nz_) return false;
        size_t i = (size_t(z) * ny_ + y) * nx_ + x;
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }
    bool active(const VoxelIndex& v) const { return active(v.x, v.y, v.z); }

  private:
    int nx_ = 0, ny_ = 0, nz_ = 0;
    std::vector<uint64_t> bits_;
};

// The directed step from an active voxel to an inactive 6-neighbor.  When
// the inactive side lies outside the domain the face is a border face and
// keeps its midpoint placement during displacement.
struct RangeVector {
    VoxelIndex active;
    uint8_t axis = 0;  // 0 = x, 1 = y, 2 = z
    int8_t sign = 1;   // inactive = active + sign * e_axis
    bool border = false;

    VoxelIndex inactive() const {
        VoxelIndex v = active;
        (axis == 0 ? v.x : axis == 1 ? v.y : v.z) += sign;
        return v;
    }

    // Face center between the two voxels; exactly one odd coordinate.
    LatticePoint support_point() const {
        LatticePoint p = active.lattice();
        (axis == 0 ? p.x : axis == 1 ? p.y : p.z) += sign;
        return p;
    }
};

// Connectivity policy at points of ambiguity (two diagonally opposite
// active voxels around a lattice edge).  Disconnect keeps the two objects
// separate, connect joins them, mixed decides per edge from the local
// gray values.
enum class PoaMode : uint8_t { disconnect, connect, mixed };

enum class PoaDecision : uint8_t { disconnect, connect };

// Mean of the four voxel values around a lattice edge; drives the Mixed
// connectivity decision at points of ambiguity.
double edge_average(const std::array<double, 4>& values);

// Juncture must be a voxel edge midpoint (one even, two odd coordinates)
// whose four surrounding voxels are all inside the domain.  Ambiguities
// never sit on the domain border, so this precondition holds wherever the
// engines call it.
double edge_average(const ScalarGrid& g, const LatticePoint& juncture);

// Fraction of the way from the active voxel center to the inactive one at
// which the surface crosses the isovalue.  Clamped to [0, 1]; a plateau
// (equal values) yields the face midpoint.
double interpolation_parameter(double f_active, double f_inactive, double isovalue);

}  // namespace vesta
