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

#include "vesta/tessellate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace vesta {

Vec3 support_position(const SupportPoint& p, const ScalarGrid& g, const IsoConfig& iso,
                      bool displace) {
    if (!displace || p.range.border) return p.id.world(g.spacing());
    const VoxelIndex av = p.range.active;
    const VoxelIndex iv = p.range.inactive();
    const double t = interpolation_parameter(g.value(av), g.value(iv), iso.isovalue);
    const Vec3 a = av.lattice().world(g.spacing());
    const Vec3 i = iv.lattice().world(g.spacing());
    return a + (i - a) * t;
}

namespace {

// Lexicographic order over stored key sequences.  Valid as a canonical
// order because cycles arrive normalized.
struct CycleKeyLess {
    const std::vector<SurfaceCycle>* cycles;

    bool operator()(uint32_t x, uint32_t y) const {
        const auto& a = (*cycles)[x].points;
        const auto& b = (*cycles)[y].points;
        const size_t n = std::min(a.size(), b.size());
        for (size_t i = 0; i < n; ++i) {
            const uint64_t ka = a[i].key();
            const uint64_t kb = b[i].key();
            if (ka != kb) return ka < kb;
        }
        return a.size() < b.size();
    }
};

}  // namespace

Mesh tessellate(const std::vector<SurfaceCycle>& cycles, const ScalarGrid& g,
                const IsoConfig& iso, const TessellateOptions& options) {
    if (cycles.size() > 0xffffffffull)
        throw std::invalid_argument("too many cycles for 32-bit source ids");

    const bool high = options.resolution == Resolution::high;

    // Canonical ranks key the centroid points of split cycles, so equal
    // cycle sets from different extractors assign equal centroid keys.
    std::vector<uint32_t> rank;
    if (high) {
        bool any_split = false;
        for (const SurfaceCycle& c : cycles)
            if (c.length() > 3) {
                any_split = true;
                break;
            }
        if (any_split) {
            std::vector<uint32_t> order(cycles.size());
            std::iota(order.begin(), order.end(), 0u);
            std::sort(order.begin(), order.end(), CycleKeyLess{&cycles});
            rank.resize(cycles.size());
            for (uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
        }
    }

    Mesh out;
    size_t tri_total = 0;
    for (const SurfaceCycle& c : cycles) {
        const int n = c.length();
        tri_total += static_cast<size_t>(high && n > 3 ? n : n - 2);
    }
    out.triangles.reserve(tri_total);
    out.triangle_source.reserve(tri_total);

    std::unordered_map<uint64_t, uint32_t> shared_index;
    if (options.indexing == PointIndexing::shared) shared_index.reserve(tri_total);

    std::vector<Vec3> pos;
    std::vector<uint32_t> local;

    for (uint32_t ci = 0; ci < cycles.size(); ++ci) {
        const auto& pts = cycles[ci].points;
        const int n = static_cast<int>(pts.size());

        pos.resize(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            pos[static_cast<size_t>(j)] = support_position(pts[static_cast<size_t>(j)], g, iso,
                                                           options.displace);

        // Canonical sequence: start at the smallest key, walk toward the
        // smaller neighbor.  Direction-independent by construction.
        int m = 0;
        for (int j = 1; j < n; ++j)
            if (pts[static_cast<size_t>(j)].key() < pts[static_cast<size_t>(m)].key()) m = j;
        const bool forward = pts[static_cast<size_t>((m + 1) % n)].key() <
                             pts[static_cast<size_t>((m + n - 1) % n)].key();
        const auto seq = [&](int i) {
            return forward ? (m + i) % n : (m + n - i) % n;
        };

        const auto point_index = [&](int j) -> uint32_t {
            const uint64_t key = pts[static_cast<size_t>(j)].key();
            const Vec3& p = pos[static_cast<size_t>(j)];
            switch (options.indexing) {
                case PointIndexing::shared: {
                    auto [it, inserted] =
                        shared_index.try_emplace(key, static_cast<uint32_t>(out.points.size()));
                    if (inserted) out.points.push_back({key, p});
                    return it->second;
                }
                case PointIndexing::per_cycle:
                    if (local[static_cast<size_t>(j)] == 0xffffffffu) {
                        local[static_cast<size_t>(j)] = static_cast<uint32_t>(out.points.size());
                        out.points.push_back({key, p});
                    }
                    return local[static_cast<size_t>(j)];
                case PointIndexing::per_triangle:
                    out.points.push_back({key, p});
                    return static_cast<uint32_t>(out.points.size() - 1);
            }
            throw std::logic_error("unreachable");
        };

        if (options.indexing == PointIndexing::per_cycle) {
            local.assign(static_cast<size_t>(n), 0xffffffffu);
        }

        // Second and third corners follow the cycle direction; the swap
        // keeps the winding while the enumeration order stays canonical.
        const auto emit = [&](uint32_t a, uint32_t b, uint32_t c) {
            out.triangles.push_back(forward ? Triangle{a, b, c} : Triangle{a, c, b});
            out.triangle_source.push_back(ci);
        };

        if (!high || n == 3) {
            for (int i = 1; i + 1 < n; ++i) {
                const uint32_t a = point_index(seq(0));
                const uint32_t b = point_index(seq(i));
                const uint32_t c = point_index(seq(i + 1));
                emit(a, b, c);
            }
            continue;
        }

        // Split cycle: centroid of the displaced support points, summed in
        // canonical order, never displaced again.
        Vec3 centroid{0, 0, 0};
        for (int i = 0; i < n; ++i) centroid += pos[static_cast<size_t>(seq(i))];
        centroid = centroid * (1.0 / n);
        const uint64_t ckey = centroid_key(rank[ci]);

        uint32_t centroid_index = 0xffffffffu;
        const auto centroid_point = [&]() -> uint32_t {
            if (options.indexing == PointIndexing::per_triangle) {
                out.points.push_back({ckey, centroid});
                return static_cast<uint32_t>(out.points.size() - 1);
            }
            if (centroid_index == 0xffffffffu) {
                if (options.indexing == PointIndexing::shared) {
                    auto [it, inserted] =
                        shared_index.try_emplace(ckey, static_cast<uint32_t>(out.points.size()));
                    if (inserted) out.points.push_back({ckey, centroid});
                    centroid_index = it->second;
                } else {
                    centroid_index = static_cast<uint32_t>(out.points.size());
                    out.points.push_back({ckey, centroid});
                }
            }
            return centroid_index;
        };

        for (int i = 0; i < n; ++i) {
            const uint32_t gix = centroid_point();
            const uint32_t b = point_index(seq(i));
            const uint32_t c = point_index(seq((i + 1) % n));
            emit(gix, b, c);
        }
    }
    return out;
}

Vec3 mesh_area_vector_sum(const Mesh& m) {
    Vec3 sum{0, 0, 0};
    for (const Triangle& t : m.triangles)
        sum += triangle_area_vector(m.points[t.a].pos, m.points[t.b].pos, m.points[t.c].pos);
    return sum;
}

}  // namespace vesta
