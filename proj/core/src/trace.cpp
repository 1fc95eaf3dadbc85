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

#include "vesta/trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace vesta {

namespace {

// Axes perpendicular to the face, ordered so that e_u' x e_v' equals the
// range vector.  Flipping the range direction swaps the pair.
inline void face_frame(const BoundaryFace& f, int& u, int& v) {
    u = (f.axis + 1) % 3;
    v = (f.axis + 2) % 3;
    if (f.sign < 0) std::swap(u, v);
}

inline void bump(LatticePoint& p, int axis, int delta) {
    (axis == 0 ? p.x : axis == 1 ? p.y : p.z) += delta;
}

inline bool same_voxel(const VoxelIndex& a, const VoxelIndex& b) { return a == b; }

}  // namespace

LatticePoint face_juncture(const BoundaryFace& f, int slot) {
    int u, v;
    face_frame(f, u, v);
    LatticePoint p = f.support_point();
    switch (slot & 3) {
        case 0:
            bump(p, u, +1);
            break;
        case 1:
            bump(p, v, +1);
            break;
        case 2:
            bump(p, u, -1);
            break;
        default:
            bump(p, v, -1);
            break;
    }
    return p;
}

std::vector<BoundaryFace> collect_boundary_faces(const ScalarGrid& g, const IsoConfig& iso) {
    ActivityMask mask(g, iso);
    std::vector<BoundaryFace> faces;
    for (int z = 0; z < g.nz(); ++z) {
        for (int y = 0; y < g.ny(); ++y) {
            for (int x = 0; x < g.nx(); ++x) {
                if (!mask.active(x, y, z)) continue;
                VoxelIndex a{x, y, z};
                for (uint8_t axis = 0; axis < 3; ++axis) {
                    for (int8_t sign : {int8_t(-1), int8_t(+1)}) {
                        BoundaryFace f{a, axis, sign, false};
                        VoxelIndex b = f.inactive();
                        if (mask.active(b)) continue;
                        f.border = !g.in_domain(b);
                        faces.push_back(f);
                    }
                }
            }
        }
    }
    return faces;
}

PoaDecision resolve_poa(const ScalarGrid& g, const IsoConfig& iso, const LatticePoint& juncture,
                        PoaMode mode, std::optional<double> mixed_threshold) {
    int ex = juncture.x & 1, ey = juncture.y & 1, ez = juncture.z & 1;
    if (ex + ey + ez != 2)
        throw std::invalid_argument("resolve_poa: point is not a voxel edge midpoint");
    // Gather the four voxels around the edge in cyclic order and verify the
    // diagonal activity pattern that defines a point of ambiguity.
    int even_axis = !ex ? 0 : !ey ? 1 : 2;
    int oa = (even_axis + 1) % 3, ob = (even_axis + 2) % 3;
    VoxelIndex base{juncture.x >> 1, juncture.y >> 1, juncture.z >> 1};
    auto corner = [&](int da, int db) {
        VoxelIndex v = base;
        if (da) (oa == 0 ? v.x : oa == 1 ? v.y : v.z) += 1;
        if (db) (ob == 0 ? v.x : ob == 1 ? v.y : v.z) += 1;
        return v;
    };
    bool a00 = is_active(g, iso, corner(0, 0));
    bool a10 = is_active(g, iso, corner(1, 0));
    bool a11 = is_active(g, iso, corner(1, 1));
    bool a01 = is_active(g, iso, corner(0, 1));
    bool diagonal = (a00 && a11 && !a10 && !a01) || (a10 && a01 && !a00 && !a11);
    if (!diagonal) throw std::invalid_argument("resolve_poa: lattice edge is not ambiguous");
    switch (mode) {
        case PoaMode::disconnect:
            return PoaDecision::disconnect;
        case PoaMode::connect:
            return PoaDecision::connect;
        default: {
            double threshold = mixed_threshold.value_or(iso.isovalue);
            return edge_average(g, juncture) >= threshold ? PoaDecision::connect
                                                          : PoaDecision::disconnect;
        }
    }
}

std::vector<SurfaceCycle> trace_cycles(const ScalarGrid& g, const IsoConfig& iso,
                                       const TraceOptions& options) {
    std::vector<BoundaryFace> faces = collect_boundary_faces(g, iso);
    const size_t nfaces = faces.size();

    // Sorting (juncture key, face, slot) triples makes each juncture one
    // contiguous group of two faces (plain lattice edge) or four (point of
    // ambiguity); no hashing on the walk.
    struct JuncEntry {
        uint64_t key;
        int32_t face;
        int32_t slot;
    };
    std::vector<JuncEntry> entries;
    entries.reserve(nfaces * 4);
    for (size_t i = 0; i < nfaces; ++i)
        for (int slot = 0; slot < 4; ++slot)
            entries.push_back({face_juncture(faces[i], slot).packed(), int32_t(i), slot});
    std::sort(entries.begin(), entries.end(),
              [](const JuncEntry& a, const JuncEntry& b) { return a.key < b.key; });

    // Successor of every quadrant path: the partner face across the end
    // juncture and the slot that juncture occupies on the partner.  Each
    // ambiguity resolves once per lattice edge, so every path through it
    // sees the same decision.
    std::vector<std::array<int32_t, 4>> succ_face(nfaces);
    std::vector<std::array<int8_t, 4>> succ_slot(nfaces);
    const auto link = [&](const JuncEntry& a, const JuncEntry& b) {
        succ_face[size_t(a.face)][size_t(a.slot)] = b.face;
        succ_slot[size_t(a.face)][size_t(a.slot)] = int8_t(b.slot);
        succ_face[size_t(b.face)][size_t(b.slot)] = a.face;
        succ_slot[size_t(b.face)][size_t(b.slot)] = int8_t(a.slot);
    };
    for (size_t lo = 0; lo < entries.size();) {
        size_t hi = lo + 1;
        while (hi < entries.size() && entries[hi].key == entries[lo].key) ++hi;
        if (hi - lo == 2) {
            link(entries[lo], entries[lo + 1]);
        } else if (hi - lo == 4) {
            const BoundaryFace& f0 = faces[size_t(entries[lo].face)];
            PoaDecision d = PoaDecision::disconnect;
            if (options.mode == PoaMode::connect) {
                d = PoaDecision::connect;
            } else if (options.mode == PoaMode::mixed) {
                const double threshold = options.mixed_threshold.value_or(iso.isovalue);
                const LatticePoint j = face_juncture(f0, entries[lo].slot);
                d = edge_average(g, j) >= threshold ? PoaDecision::connect
                                                    : PoaDecision::disconnect;
            }
            size_t mate = 0;
            for (size_t a = lo + 1; a < hi && !mate; ++a) {
                const BoundaryFace& fa = faces[size_t(entries[a].face)];
                const bool match = d == PoaDecision::disconnect
                                       ? same_voxel(fa.active, f0.active)
                                       : same_voxel(fa.inactive(), f0.inactive());
                if (match) mate = a;
            }
            if (!mate) throw std::logic_error("no partner face at ambiguity");
            link(entries[lo], entries[mate]);
            size_t o1 = 0, o2 = 0;
            for (size_t a = lo + 1; a < hi; ++a)
                if (a != mate) (o1 ? o2 : o1) = a;
            link(entries[o1], entries[o2]);
        } else {
            throw std::logic_error("juncture with odd face incidence");
        }
        lo = hi;
    }

    std::vector<bool> visited(nfaces * 4, false);
    std::vector<SurfaceCycle> cycles;

    for (size_t f0 = 0; f0 < nfaces; ++f0) {
        for (int q0 = 0; q0 < 4; ++q0) {
            if (visited[f0 * 4 + q0]) continue;
            SurfaceCycle cycle;
            size_t f = f0;
            int q = q0;
            size_t guard = 0;
            do {
                if (visited[f * 4 + q]) throw std::logic_error("quadrant path visited twice");
                visited[f * 4 + q] = true;
                cycle.points.push_back({faces[f].support_point(), faces[f]});

                const size_t s = size_t(path_end_slot(q));
                const int32_t nf = succ_face[f][s];
                q = path_from_start_slot(succ_slot[f][s]);
                f = size_t(nf);
                if (++guard > nfaces * 4) throw std::logic_error("unterminated cycle walk");
            } while (!(f == f0 && q == q0));
            cycle.normalize();
            cycles.push_back(std::move(cycle));
        }
    }

    std::sort(cycles.begin(), cycles.end(), cycle_less);
    return cycles;
}

}  // namespace vesta
