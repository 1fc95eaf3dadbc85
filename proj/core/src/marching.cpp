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

#include "vesta/marching.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace vesta {

namespace {

// Frozen reference rows: the plus-oriented path of each center.  The minus
// path is always the reversal.  The constructor re-derives every path from
// the face-quadrant convention and refuses to run on any mismatch.
constexpr std::array<QuadrantPathTable::Path, 12> kFrozenPlus = {{
    {13, 12}, {12, 14}, {15, 12}, {12, 16}, {14, 13}, {13, 15},
    {16, 14}, {15, 16}, {17, 13}, {14, 17}, {17, 15}, {16, 17},
}};

int juncture_id_at(const LatticePoint& p) {
    for (int j = 0; j < 6; ++j) {
        const auto& o = kJunctureOffset2[j];
        if (p.x == o[0] && p.y == o[1] && p.z == o[2]) return 12 + j;
    }
    return -1;
}

}  // namespace

const QuadrantPathTable& QuadrantPathTable::instance() {
    static const QuadrantPathTable table;
    return table;
}

QuadrantPathTable::Path QuadrantPathTable::path(int center, bool plus) const {
    const Path& p = plus_[center];
    return plus ? p : Path{p.exit, p.entry};
}

QuadrantPathTable::QuadrantPathTable() {
    for (int c = 0; c < 12; ++c) {
        std::array<Path, 2> derived{};
        for (int side = 0; side < 2; ++side) {
            BoundaryFace f;
            f.active = cell_corner_offset(kCenterCorners[c][side]);
            f.axis = static_cast<uint8_t>(kCenterAxis[c]);
            f.sign = side == 0 ? 1 : -1;

            const LatticePoint sp = f.support_point();
            const auto& co = kCenterOffset2[c];
            if (sp.x != co[0] || sp.y != co[1] || sp.z != co[2])
                throw std::logic_error("cell table: center offset mismatch");

            std::array<int, 4> jid{};
            for (int slot = 0; slot < 4; ++slot)
                jid[slot] = juncture_id_at(face_juncture(f, slot));

            // Exactly one of the four quadrant paths stays inside the cell.
            int found = -1;
            for (int p = 0; p < 4; ++p) {
                if (jid[path_start_slot(p)] >= 0 && jid[path_end_slot(p)] >= 0) {
                    if (found >= 0)
                        throw std::logic_error("cell table: ambiguous in-cell path");
                    found = p;
                }
            }
            if (found < 0) throw std::logic_error("cell table: no in-cell path");
            derived[side] = {static_cast<uint8_t>(jid[path_start_slot(found)]),
                             static_cast<uint8_t>(jid[path_end_slot(found)])};
        }

        const Path plus = kFrozenPlus[c];
        const bool side0_plus = derived[0].entry == plus.entry && derived[0].exit == plus.exit;
        const bool side0_minus = derived[0].entry == plus.exit && derived[0].exit == plus.entry;
        const bool side1_plus = derived[1].entry == plus.entry && derived[1].exit == plus.exit;
        const bool side1_minus = derived[1].entry == plus.exit && derived[1].exit == plus.entry;
        if (!((side0_plus && side1_minus) || (side0_minus && side1_plus)))
            throw std::logic_error("cell table: derived paths disagree with reference rows");

        plus_[c] = plus;
        side_is_plus_[c] = {side0_plus, side1_plus};
    }
}

CellCycles cell_cycles(uint8_t occupancy,
                       const std::function<PoaDecision(int juncture)>& resolver) {
    const QuadrantPathTable& table = QuadrantPathTable::instance();

    bool present[12] = {};
    int side_of[12];
    int active_of[12];
    int inactive_of[12];
    int entry_of[12];
    int exit_of[12];

    for (int c = 0; c < 12; ++c) {
        const int lo = kCenterCorners[c][0];
        const int hi = kCenterCorners[c][1];
        const bool alo = (occupancy >> lo) & 1;
        const bool ahi = (occupancy >> hi) & 1;
        if (alo == ahi) continue;
        const int side = alo ? 0 : 1;
        const QuadrantPathTable::Path p = table.side_path(c, side);
        present[c] = true;
        side_of[c] = side;
        active_of[c] = alo ? lo : hi;
        inactive_of[c] = alo ? hi : lo;
        entry_of[c] = p.entry;
        exit_of[c] = p.exit;
    }

    // Memoized decisions so both cycles through a doubly ambiguous cell see
    // the same answer without querying the resolver twice.
    bool have_decision[6] = {};
    PoaDecision decision[6];

    int successor[12];
    for (int c = 0; c < 12; ++c) {
        if (!present[c]) continue;
        const int j = exit_of[c];
        int out[2];
        int n_out = 0;
        for (int k : kJunctureCenters[j - 12]) {
            if (present[k] && entry_of[k] == j) {
                if (n_out == 2) throw std::logic_error("cell: more than two paths leave a juncture");
                out[n_out++] = k;
            }
        }
        if (n_out == 1) {
            successor[c] = out[0];
            continue;
        }
        if (n_out != 2) throw std::logic_error("cell: juncture with no outgoing path");
        if (!have_decision[j - 12]) {
            decision[j - 12] = resolver(j);
            have_decision[j - 12] = true;
        }
        const bool keep_active = decision[j - 12] == PoaDecision::disconnect;
        int chosen = -1;
        for (int k = 0; k < 2; ++k) {
            const bool match = keep_active ? active_of[out[k]] == active_of[c]
                                           : inactive_of[out[k]] == inactive_of[c];
            if (match) {
                if (chosen >= 0) throw std::logic_error("cell: ambiguous successor");
                chosen = out[k];
            }
        }
        if (chosen < 0) throw std::logic_error("cell: no successor shares the deciding voxel");
        successor[c] = chosen;
    }

    CellCycles out;
    bool done[12] = {};
    for (int start = 0; start < 12; ++start) {
        if (!present[start] || done[start]) continue;
        if (out.count == 4) throw std::logic_error("cell: more than four cycles");
        auto& entries = out.entries[static_cast<size_t>(out.count)];
        int len = 0;
        int c = start;
        do {
            if (len == 12) throw std::logic_error("cell: cycle longer than twelve paths");
            done[c] = true;
            entries[static_cast<size_t>(len++)] = {static_cast<uint8_t>(c),
                                                   static_cast<uint8_t>(side_of[c])};
            c = successor[c];
        } while (c != start);
        out.length[static_cast<size_t>(out.count)] = len;
        ++out.count;
    }
    return out;
}

namespace {

struct CellSweep {
    const ScalarGrid* grid;
    const ActivityMask* mask;
    double isovalue;
    PoaMode mode;
    double mixed_threshold;

    // Cycles for every mixed cell whose base z lies in [z_lo, z_hi).
    void run(int z_lo, int z_hi, std::vector<SurfaceCycle>& out) const {
        const int nx = grid->nx();
        const int ny = grid->ny();
        VoxelIndex base;
        for (base.z = z_lo; base.z < z_hi; ++base.z) {
            for (base.y = -1; base.y < ny; ++base.y) {
                for (base.x = -1; base.x < nx; ++base.x) {
                    sweep_cell(base, out);
                }
            }
        }
    }

  private:
    void sweep_cell(const VoxelIndex& base, std::vector<SurfaceCycle>& out) const {
        uint8_t occ = 0;
        for (int b = 0; b < 8; ++b) {
            const VoxelIndex o = cell_corner_offset(b);
            if (mask->active({base.x + o.x, base.y + o.y, base.z + o.z}))
                occ |= static_cast<uint8_t>(1u << b);
        }
        if (occ == 0 || occ == 255) return;

        const LatticePoint cell = base.lattice();
        const auto resolver = [&](int j) -> PoaDecision {
            if (mode != PoaMode::mixed)
                return mode == PoaMode::connect ? PoaDecision::connect : PoaDecision::disconnect;
            const auto& o = kJunctureOffset2[j - 12];
            const LatticePoint edge{cell.x + o[0], cell.y + o[1], cell.z + o[2]};
            return edge_average(*grid, edge) >= mixed_threshold ? PoaDecision::connect
                                                                : PoaDecision::disconnect;
        };

        const CellCycles cycles = cell_cycles(occ, resolver);
        const uint32_t serial = cell_serial(base);
        for (int i = 0; i < cycles.count; ++i) {
            SurfaceCycle cyc;
            cyc.group = serial;
            cyc.points.reserve(static_cast<size_t>(cycles.length[static_cast<size_t>(i)]));
            for (int k = 0; k < cycles.length[static_cast<size_t>(i)]; ++k) {
                const CellPathRef ref = cycles.entries[static_cast<size_t>(i)][static_cast<size_t>(k)];
                const int corner = kCenterCorners[ref.center][ref.active_side];
                const VoxelIndex o = cell_corner_offset(corner);
                RangeVector range;
                range.active = {base.x + o.x, base.y + o.y, base.z + o.z};
                range.axis = static_cast<uint8_t>(kCenterAxis[ref.center]);
                range.sign = ref.active_side == 0 ? 1 : -1;
                range.border = !grid->in_domain(range.inactive());
                cyc.points.push_back({range.support_point(), range});
            }
            cyc.normalize();
            out.push_back(std::move(cyc));
        }
    }

    uint32_t cell_serial(const VoxelIndex& base) const {
        const uint64_t sx = static_cast<uint64_t>(grid->nx()) + 1;
        const uint64_t sy = static_cast<uint64_t>(grid->ny()) + 1;
        const uint64_t serial =
            (static_cast<uint64_t>(base.z + 1) * sy + static_cast<uint64_t>(base.y + 1)) * sx +
            static_cast<uint64_t>(base.x + 1);
        return static_cast<uint32_t>(serial);
    }
};

}  // namespace

std::vector<SurfaceCycle> scan_volume(const ScalarGrid& g, const IsoConfig& iso,
                                      const MarchOptions& options) {
    const uint64_t total_cells = (static_cast<uint64_t>(g.nx()) + 1) *
                                 (static_cast<uint64_t>(g.ny()) + 1) *
                                 (static_cast<uint64_t>(g.nz()) + 1);
    if (total_cells > 0xffffffffull)
        throw std::invalid_argument("volume too large for 32-bit cell serials");

    const ActivityMask mask(g, iso);
    CellSweep sweep{&g, &mask, iso.isovalue, options.mode,
                    options.mixed_threshold.value_or(iso.isovalue)};

    const int z_cells = g.nz() + 1;
    const int threads = std::max(1, options.threads);
    if (threads == 1 || z_cells < 2 * threads) {
        std::vector<SurfaceCycle> out;
        sweep.run(-1, g.nz(), out);
        return out;
    }

    // Contiguous z slabs, merged in scan order: identical output for any
    // thread count.
    std::vector<std::vector<SurfaceCycle>> parts(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        const int lo = -1 + static_cast<int>(static_cast<int64_t>(z_cells) * t / threads);
        const int hi = -1 + static_cast<int>(static_cast<int64_t>(z_cells) * (t + 1) / threads);
        pool.emplace_back([&sweep, &parts, t, lo, hi] { sweep.run(lo, hi, parts[static_cast<size_t>(t)]); });
    }
    for (auto& th : pool) th.join();

    std::vector<SurfaceCycle> out;
    size_t total = 0;
    for (const auto& part : parts) total += part.size();
    out.reserve(total);
    for (auto& part : parts)
        for (auto& cyc : part) out.push_back(std::move(cyc));
    return out;
}

}  // namespace vesta
