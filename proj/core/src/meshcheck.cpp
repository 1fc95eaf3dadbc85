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

#include "vesta/meshcheck.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace vesta {

namespace {

uint64_t pack_pair(uint32_t a, uint32_t b) {
    return (static_cast<uint64_t>(a) << 32) | b;
}

}  // namespace

size_t count_unmatched_edges(const Mesh& m) {
    std::unordered_map<uint64_t, int64_t> open;
    open.reserve(m.triangles.size() * 2);
    const auto add = [&](uint32_t a, uint32_t b) {
        // A directed edge cancels an open antiparallel one if present.
        auto it = open.find(pack_pair(b, a));
        if (it != open.end() && it->second > 0) {
            --it->second;
            return;
        }
        ++open[pack_pair(a, b)];
    };
    for (const Triangle& t : m.triangles) {
        add(t.a, t.b);
        add(t.b, t.c);
        add(t.c, t.a);
    }
    size_t unmatched = 0;
    for (const auto& [key, n] : open) unmatched += static_cast<size_t>(n);
    return unmatched;
}

double signed_volume(const Mesh& m, const Vec3& spacing) {
    double six_vol = 0;
    for (const Triangle& t : m.triangles) {
        const Vec3& a = m.points[t.a].pos;
        const Vec3& b = m.points[t.b].pos;
        const Vec3& c = m.points[t.c].pos;
        six_vol += dot(a, cross(b, c));
    }
    return six_vol / (6.0 * spacing.x * spacing.y * spacing.z);
}

bool plausible_census(const CycleCensus& census, bool mixed) {
    for (const auto& [len, n] : census) {
        if (n < 0) return false;
        if (len >= 3 && len <= 7) continue;
        if (mixed && (len == 8 || len == 9 || len == 12)) continue;
        return false;
    }
    return true;
}

ValidationReport validate(const Mesh& m, const Vec3& spacing) {
    ValidationReport r;
    Mesh d = dedup_points(m);
    r.duplicate_points = m.points.size() - d.points.size();
    r.point_count = d.points.size();
    r.triangle_count = d.triangles.size();

    {
        Mesh probe = d;
        r.degenerate_triangles = drop_degenerate_triangles(probe);
    }

    r.unmatched_edges = count_unmatched_edges(d);

    const std::vector<uint32_t> labels = label_components(d, &r.component_count);
    std::vector<int64_t> vertices(r.component_count, 0);
    std::vector<int64_t> edges(r.component_count, 0);
    std::vector<int64_t> faces(r.component_count, 0);
    std::vector<bool> point_seen(d.points.size(), false);
    std::unordered_set<uint64_t> edge_seen;
    edge_seen.reserve(d.triangles.size() * 2);
    for (size_t i = 0; i < d.triangles.size(); ++i) {
        const Triangle& t = d.triangles[i];
        const uint32_t c = labels[i];
        ++faces[c];
        for (uint32_t p : {t.a, t.b, t.c}) {
            if (!point_seen[p]) {
                point_seen[p] = true;
                ++vertices[c];
            }
        }
        const auto edge = [&](uint32_t a, uint32_t b) {
            if (edge_seen.insert(pack_pair(std::min(a, b), std::max(a, b))).second) ++edges[c];
        };
        edge(t.a, t.b);
        edge(t.b, t.c);
        edge(t.c, t.a);
    }
    r.euler.resize(r.component_count);
    for (uint32_t c = 0; c < r.component_count; ++c)
        r.euler[c] = vertices[c] - edges[c] + faces[c];

    r.volume = signed_volume(d, spacing);
    return r;
}

std::string to_text(const ValidationReport& r) {
    std::ostringstream out;
    out << "points: " << r.point_count;
    if (r.duplicate_points) out << " (merged " << r.duplicate_points << " duplicates)";
    out << "\ntriangles: " << r.triangle_count;
    if (r.degenerate_triangles) out << " (" << r.degenerate_triangles << " degenerate)";
    out << "\nunmatched directed edges: " << r.unmatched_edges;
    out << "\ncomponents: " << r.component_count;
    if (!r.euler.empty()) {
        out << " (euler";
        for (int64_t e : r.euler) out << ' ' << e;
        out << ')';
    }
    out << "\nsigned volume [voxels]: " << r.volume;
    out << "\nclosed: " << (r.closed() ? "yes" : "no") << '\n';
    return out.str();
}

namespace {

// Strict triangle-triangle intersection.  Exact for half-integer inputs:
// every predicate is a sum of products of coordinate differences, well
// inside double precision for lattice-sized meshes.

struct Tri {
    Vec3 p[3];
};

// Collects the parameter range of the triangle's cross-section with the
// other triangle's plane along direction dir.  d[i] are signed distances of
// the corners to that plane.  False when the triangle misses the plane.
bool plane_interval(const Tri& t, const double d[3], const Vec3& dir, double& lo, double& hi) {
    double ts[6];
    int n = 0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const double di = d[i];
        const double dj = d[j];
        if (di == 0.0) ts[n++] = dot(dir, t.p[i]);
        if (di == 0.0 || dj == 0.0) continue;
        if ((di > 0) != (dj > 0)) {
            const double f = di / (di - dj);
            const Vec3 x = t.p[i] + (t.p[j] - t.p[i]) * f;
            ts[n++] = dot(dir, x);
        }
    }
    if (n == 0) return false;
    lo = hi = ts[0];
    for (int i = 1; i < n; ++i) {
        lo = std::min(lo, ts[i]);
        hi = std::max(hi, ts[i]);
    }
    return true;
}

double orient2(const Vec2& a, const Vec2& b, const Vec2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool strictly_inside(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
    const double o1 = orient2(a, b, p);
    const double o2 = orient2(b, c, p);
    const double o3 = orient2(c, a, p);
    return (o1 > 0 && o2 > 0 && o3 > 0) || (o1 < 0 && o2 < 0 && o3 < 0);
}

bool proper_cross(const Vec2& p, const Vec2& q, const Vec2& r, const Vec2& s) {
    const double a = orient2(p, q, r);
    const double b = orient2(p, q, s);
    const double c = orient2(r, s, p);
    const double d = orient2(r, s, q);
    return ((a > 0) != (b > 0)) && a != 0 && b != 0 && ((c > 0) != (d > 0)) && c != 0 && d != 0;
}

bool coplanar_overlap(const Tri& t1, const Tri& t2, const Vec3& n) {
    // Project out the dominant normal axis.
    const double ax = std::fabs(n.x);
    const double ay = std::fabs(n.y);
    const double az = std::fabs(n.z);
    int drop = 2;
    if (ax >= ay && ax >= az) drop = 0;
    else if (ay >= az) drop = 1;
    const auto flat = [&](const Vec3& v) -> Vec2 {
        if (drop == 0) return {v.y, v.z};
        if (drop == 1) return {v.x, v.z};
        return {v.x, v.y};
    };
    Vec2 a[3];
    Vec2 b[3];
    for (int i = 0; i < 3; ++i) {
        a[i] = flat(t1.p[i]);
        b[i] = flat(t2.p[i]);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (proper_cross(a[i], a[(i + 1) % 3], b[j], b[(j + 1) % 3])) return true;
    for (int i = 0; i < 3; ++i) {
        if (strictly_inside(a[i], b[0], b[1], b[2])) return true;
        if (strictly_inside(b[i], a[0], a[1], a[2])) return true;
    }
    return false;
}

bool tri_tri_proper(const Tri& t1, const Tri& t2) {
    const Vec3 n2 = cross(t2.p[1] - t2.p[0], t2.p[2] - t2.p[0]);
    double d1[3];
    for (int i = 0; i < 3; ++i) d1[i] = dot(n2, t1.p[i] - t2.p[0]);
    if (d1[0] > 0 && d1[1] > 0 && d1[2] > 0) return false;
    if (d1[0] < 0 && d1[1] < 0 && d1[2] < 0) return false;

    const Vec3 n1 = cross(t1.p[1] - t1.p[0], t1.p[2] - t1.p[0]);
    double d2[3];
    for (int i = 0; i < 3; ++i) d2[i] = dot(n1, t2.p[i] - t1.p[0]);
    if (d2[0] > 0 && d2[1] > 0 && d2[2] > 0) return false;
    if (d2[0] < 0 && d2[1] < 0 && d2[2] < 0) return false;

    if (d1[0] == 0 && d1[1] == 0 && d1[2] == 0) return coplanar_overlap(t1, t2, n2);

    const Vec3 dir = cross(n1, n2);
    double lo1, hi1, lo2, hi2;
    if (!plane_interval(t1, d1, dir, lo1, hi1)) return false;
    if (!plane_interval(t2, d2, dir, lo2, hi2)) return false;
    // Positive-length overlap only: touching at a single point is contact,
    // not intersection.
    return std::min(hi1, hi2) > std::max(lo1, lo2);
}

}  // namespace

size_t count_self_intersections(const Mesh& m) {
    const size_t n = m.triangles.size();
    if (n < 2) return 0;

    std::vector<Vec3> lo(n), hi(n);
    Vec3 mean_extent{0, 0, 0};
    for (size_t i = 0; i < n; ++i) {
        const Triangle& t = m.triangles[i];
        const Vec3& a = m.points[t.a].pos;
        const Vec3& b = m.points[t.b].pos;
        const Vec3& c = m.points[t.c].pos;
        lo[i] = {std::min({a.x, b.x, c.x}), std::min({a.y, b.y, c.y}), std::min({a.z, b.z, c.z})};
        hi[i] = {std::max({a.x, b.x, c.x}), std::max({a.y, b.y, c.y}), std::max({a.z, b.z, c.z})};
        mean_extent += hi[i] - lo[i];
    }
    mean_extent = mean_extent * (1.0 / static_cast<double>(n));
    const double h =
        std::max({mean_extent.x, mean_extent.y, mean_extent.z, 1e-9});

    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
    const auto cell_key = [&](int64_t x, int64_t y, int64_t z) {
        return static_cast<uint64_t>(x * 73856093 ^ y * 19349663 ^ z * 83492791);
    };
    for (size_t i = 0; i < n; ++i) {
        const int64_t x0 = static_cast<int64_t>(std::floor(lo[i].x / h));
        const int64_t y0 = static_cast<int64_t>(std::floor(lo[i].y / h));
        const int64_t z0 = static_cast<int64_t>(std::floor(lo[i].z / h));
        const int64_t x1 = static_cast<int64_t>(std::floor(hi[i].x / h));
        const int64_t y1 = static_cast<int64_t>(std::floor(hi[i].y / h));
        const int64_t z1 = static_cast<int64_t>(std::floor(hi[i].z / h));
        for (int64_t z = z0; z <= z1; ++z)
            for (int64_t y = y0; y <= y1; ++y)
                for (int64_t x = x0; x <= x1; ++x)
                    buckets[cell_key(x, y, z)].push_back(static_cast<uint32_t>(i));
    }

    const auto shares_point = [&](const Triangle& s, const Triangle& t) {
        for (uint32_t p : {s.a, s.b, s.c})
            for (uint32_t q : {t.a, t.b, t.c})
                if (p == q) return true;
        return false;
    };

    std::unordered_set<uint64_t> tested;
    size_t count = 0;
    for (const auto& [key, list] : buckets) {
        for (size_t u = 0; u + 1 < list.size(); ++u) {
            for (size_t v = u + 1; v < list.size(); ++v) {
                uint32_t i = list[u];
                uint32_t j = list[v];
                if (i == j) continue;
                if (i > j) std::swap(i, j);
                if (lo[i].x > hi[j].x || lo[j].x > hi[i].x || lo[i].y > hi[j].y ||
                    lo[j].y > hi[i].y || lo[i].z > hi[j].z || lo[j].z > hi[i].z)
                    continue;
                if (!tested.insert(pack_pair(i, j)).second) continue;
                const Triangle& s = m.triangles[i];
                const Triangle& t = m.triangles[j];
                if (shares_point(s, t)) continue;
                const Tri t1{{m.points[s.a].pos, m.points[s.b].pos, m.points[s.c].pos}};
                const Tri t2{{m.points[t.a].pos, m.points[t.b].pos, m.points[t.c].pos}};
                if (tri_tri_proper(t1, t2)) ++count;
            }
        }
    }
    return count;
}

std::vector<std::vector<LatticePoint>> slice_mesh(const Mesh& m, int axis, int32_t plane2) {
    const auto lattice_coord = [&](uint64_t key, int ax) {
        const LatticePoint p = unpack_lattice(key);
        return ax == 0 ? p.x : ax == 1 ? p.y : p.z;
    };
    const auto in_plane = [&](uint64_t key) {
        return !is_centroid_key(key) && lattice_coord(key, axis) == plane2;
    };

    // World height of the cutting plane, taken from any in-plane point so
    // no spacing argument is needed.
    double plane_w = 0;
    bool found = false;
    for (const MeshPoint& p : m.points) {
        if (in_plane(p.key)) {
            plane_w = axis == 0 ? p.pos.x : axis == 1 ? p.pos.y : p.pos.z;
            found = true;
            break;
        }
    }
    if (!found) return {};
    const auto height = [&](const Vec3& v) { return axis == 0 ? v.x : axis == 1 ? v.y : v.z; };

    // In-plane edge u -> v from each triangle of the upper sheet: the third
    // corner lies strictly above, or the triangle is coplanar with winding
    // facing the positive axis.  Coplanar patches appear where a cycle is
    // pinched into the plane; their interior edges occur once per direction
    // and cancel, leaving only the rim.
    std::map<std::pair<uint64_t, uint64_t>, int> net;
    const auto add_edge = [&](uint64_t u, uint64_t v) {
        const auto rev = net.find({v, u});
        if (rev != net.end()) {
            if (--rev->second == 0) net.erase(rev);
            return;
        }
        ++net[{u, v}];
    };
    for (const Triangle& t : m.triangles) {
        const uint32_t idx[3] = {t.a, t.b, t.c};
        int off = -1;
        int planar = 0;
        for (int i = 0; i < 3; ++i) {
            if (in_plane(m.points[idx[i]].key)) ++planar;
            else off = i;
        }
        if (planar == 3) {
            const Vec3 a = m.points[idx[0]].pos;
            const Vec3 b = m.points[idx[1]].pos;
            const Vec3 c = m.points[idx[2]].pos;
            if (height(cross(b - a, c - a)) <= 0) continue;
            add_edge(m.points[idx[0]].key, m.points[idx[1]].key);
            add_edge(m.points[idx[1]].key, m.points[idx[2]].key);
            add_edge(m.points[idx[2]].key, m.points[idx[0]].key);
            continue;
        }
        if (planar != 2) continue;
        if (height(m.points[idx[off]].pos) <= plane_w) continue;
        add_edge(m.points[idx[(off + 1) % 3]].key, m.points[idx[(off + 2) % 3]].key);
    }

    std::map<uint64_t, uint64_t> next;
    for (const auto& [edge, count] : net)
        if (count != 1 || !next.emplace(edge.first, edge.second).second)
            throw std::logic_error("cross-section branches at a point");

    std::vector<std::vector<LatticePoint>> loops;
    std::unordered_set<uint64_t> used;
    for (const auto& [start, first] : next) {
        if (used.count(start)) continue;
        std::vector<LatticePoint> loop;
        uint64_t cur = start;
        do {
            if (!used.insert(cur).second)
                throw std::logic_error("cross-section chains overlap");
            loop.push_back(unpack_lattice(cur));
            const auto it = next.find(cur);
            if (it == next.end()) throw std::logic_error("cross-section chain breaks");
            cur = it->second;
        } while (cur != start);
        loops.push_back(std::move(loop));
    }
    return loops;
}

}  // namespace vesta
