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

#include "vesta/grid.hpp"

#include <algorithm>

namespace vesta {

namespace {

void check_dims(int nx, int ny, int nz) {
    if (nx <= 0 || ny <= 0 || nz <= 0)
        throw std::invalid_argument("grid dimensions must be positive");
    // Lattice keys pack each doubled coordinate into 21 bits.
    if (nx >= (1 << 19) || ny >= (1 << 19) || nz >= (1 << 19))
        throw std::invalid_argument("grid dimension too large for lattice keys");
}

}  // namespace

ScalarGrid::ScalarGrid(int nx, int ny, int nz, ValueKind kind, Vec3 spacing)
    : nx_(nx), ny_(ny), nz_(nz), kind_(kind), spacing_(spacing) {
    check_dims(nx, ny, nz);
    size_t n = voxel_count();
    switch (kind_) {
        case ValueKind::u8:
            u8_.assign(n, 0);
            break;
        case ValueKind::u16:
            u16_.assign(n, 0);
            break;
        case ValueKind::f32:
            f32_.assign(n, 0.0f);
            break;
    }
}

ScalarGrid ScalarGrid::from_u8(int nx, int ny, int nz, std::vector<uint8_t> data, Vec3 spacing) {
    check_dims(nx, ny, nz);
    if (data.size() != size_t(nx) * ny * nz)
        throw std::invalid_argument("payload size does not match dimensions");
    ScalarGrid g;
    g.nx_ = nx;
    g.ny_ = ny;
    g.nz_ = nz;
    g.kind_ = ValueKind::u8;
    g.spacing_ = spacing;
    g.u8_ = std::move(data);
    return g;
}

ScalarGrid ScalarGrid::from_u16(int nx, int ny, int nz, std::vector<uint16_t> data, Vec3 spacing) {
    check_dims(nx, ny, nz);
    if (data.size() != size_t(nx) * ny * nz)
        throw std::invalid_argument("payload size does not match dimensions");
    ScalarGrid g;
    g.nx_ = nx;
    g.ny_ = ny;
    g.nz_ = nz;
    g.kind_ = ValueKind::u16;
    g.spacing_ = spacing;
    g.u16_ = std::move(data);
    return g;
}

ScalarGrid ScalarGrid::from_f32(int nx, int ny, int nz, std::vector<float> data, Vec3 spacing) {
    check_dims(nx, ny, nz);
    if (data.size() != size_t(nx) * ny * nz)
        throw std::invalid_argument("payload size does not match dimensions");
    ScalarGrid g;
    g.nx_ = nx;
    g.ny_ = ny;
    g.nz_ = nz;
    g.kind_ = ValueKind::f32;
    g.spacing_ = spacing;
    g.f32_ = std::move(data);
    return g;
}

void ScalarGrid::set_value(const VoxelIndex& v, double val) {
    if (!in_domain(v)) throw std::out_of_range("set_value outside grid domain");
    size_t i = linear(v);
    switch (kind_) {
        case ValueKind::u8:
            u8_[i] = uint8_t(std::clamp(val, 0.0, 255.0));
            break;
        case ValueKind::u16:
            u16_[i] = uint16_t(std::clamp(val, 0.0, 65535.0));
            break;
        case ValueKind::f32:
            f32_[i] = float(val);
            break;
    }
}

ActivityMask::ActivityMask(const ScalarGrid& g, const IsoConfig& iso)
    : nx_(g.nx()), ny_(g.ny()), nz_(g.nz()) {
    size_t n = g.voxel_count();
    bits_.assign((n + 63) / 64, 0);
    double t = iso.isovalue;
    size_t i = 0;
    switch (g.kind()) {
        case ValueKind::u8:
            for (uint8_t v : g.u8_data()) {
                if (v >= t) bits_[i >> 6] |= uint64_t{1} << (i & 63);
                ++i;
            }
            break;
        case ValueKind::u16:
            for (uint16_t v : g.u16_data()) {
                if (v >= t) bits_[i >> 6] |= uint64_t{1} << (i & 63);
                ++i;
            }
            break;
        case ValueKind::f32:
            for (float v : g.f32_data()) {
                if (v >= t) bits_[i >> 6] |= uint64_t{1} << (i & 63);
                ++i;
            }
            break;
    }
}

double edge_average(const std::array<double, 4>& values) {
    return (values[0] + values[1] + values[2] + values[3]) / 4.0;
}

double edge_average(const ScalarGrid& g, const LatticePoint& juncture) {
    int ex = juncture.x & 1, ey = juncture.y & 1, ez = juncture.z & 1;
    if (ex + ey + ez != 2)
        throw std::invalid_argument("edge_average: point is not a voxel edge midpoint");
    // The edge runs along the even axis; the four voxels around it differ
    // in the two odd axes.
    std::array<double, 4> vals;
    int n = 0;
    for (int da = 0; da < 2; ++da) {
        for (int db = 0; db < 2; ++db) {
            VoxelIndex v;
            if (!ex) {  // edge along x
                v = {juncture.x / 2, (juncture.y - 1) / 2 + da, (juncture.z - 1) / 2 + db};
            } else if (!ey) {  // edge along y
                v = {(juncture.x - 1) / 2 + da, juncture.y / 2, (juncture.z - 1) / 2 + db};
            } else {  // edge along z
                v = {(juncture.x - 1) / 2 + da, (juncture.y - 1) / 2 + db, juncture.z / 2};
            }
            if (!g.in_domain(v))
                throw std::invalid_argument("edge_average: voxel outside grid domain");
            vals[n++] = g.value(v);
        }
    }
    return edge_average(vals);
}

double interpolation_parameter(double f_active, double f_inactive, double isovalue) {
    if (f_active == f_inactive) return 0.5;
    double t = (f_active - isovalue) / (f_active - f_inactive);
    return std::clamp(t, 0.0, 1.0);
}

}  // namespace vesta
