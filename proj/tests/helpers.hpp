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

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "vesta/cycle.hpp"
#include "vesta/grid.hpp"
#include "vesta/mesh.hpp"

namespace vt {

// Binary grid with the listed voxels at 255 and everything else at 0.
inline vesta::ScalarGrid grid_of(int nx, int ny, int nz,
                                 std::initializer_list<vesta::VoxelIndex> actives) {
    std::vector<uint8_t> values(size_t(nx) * size_t(ny) * size_t(nz), 0);
    for (const auto& v : actives)
        values[(size_t(v.z) * size_t(ny) + size_t(v.y)) * size_t(nx) + size_t(v.x)] = 255;
    return vesta::ScalarGrid::from_u8(nx, ny, nz, std::move(values));
}

inline std::string census_text(const vesta::CycleCensus& census) {
    std::ostringstream out;
    for (const auto& [len, count] : census) out << " " << len << ":" << count;
    return out.str();
}

// Sorted point identity list: key plus position, for exact set comparison.
struct PointRow {
    uint64_t key;
    double x, y, z;
    bool operator==(const PointRow&) const = default;
    bool operator<(const PointRow& o) const {
        return std::tie(key, x, y, z) < std::tie(o.key, o.x, o.y, o.z);
    }
};

inline std::vector<PointRow> point_rows(const vesta::Mesh& m) {
    std::vector<PointRow> rows;
    rows.reserve(m.points.size());
    for (const auto& p : m.points) rows.push_back({p.key, p.pos.x, p.pos.y, p.pos.z});
    std::sort(rows.begin(), rows.end());
    return rows;
}

// True when `actual` is a rotation (not a reflection) of `expected`.
inline bool cyclic_equal(const std::vector<int>& actual, const std::vector<int>& expected) {
    const size_t n = actual.size();
    if (n != expected.size()) return false;
    for (size_t shift = 0; shift < n; ++shift) {
        bool match = true;
        for (size_t i = 0; i < n && match; ++i)
            if (actual[(shift + i) % n] != expected[i]) match = false;
        if (match) return true;
    }
    return false;
}

}  // namespace vt
