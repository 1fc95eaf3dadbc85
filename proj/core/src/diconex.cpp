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

#include "vesta/diconex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace vesta {

PixelGrid::PixelGrid(int nx, int ny, const Vec2& spacing) : nx_(nx), ny_(ny), spacing_(spacing) {
    if (nx <= 0 || ny <= 0) throw std::invalid_argument("pixel grid dimensions must be positive");
    if (nx >= (1 << 19) || ny >= (1 << 19))
        throw std::invalid_argument("pixel grid dimension exceeds key range");
    values_.assign(size_t(nx) * size_t(ny), 0.0);
}

PixelGrid pixel_slice(const ScalarGrid& g, int axis, int32_t layer) {
    const int u = (axis + 1) % 3;
    const int v = (axis + 2) % 3;
    const int dims[3] = {g.nx(), g.ny(), g.nz()};
    const double sp[3] = {g.spacing().x, g.spacing().y, g.spacing().z};
    if (layer < 0 || layer >= dims[axis]) throw std::invalid_argument("slice layer out of range");

    PixelGrid out(dims[u], dims[v], {sp[u], sp[v]});
    for (int j = 0; j < dims[v]; ++j) {
        for (int i = 0; i < dims[u]; ++i) {
            int c[3];
            c[axis] = layer;
            c[u] = i;
            c[v] = j;
            out.set_value({i, j}, g.value({c[0], c[1], c[2]}));
        }
    }
    return out;
}

void Contour::normalize() {
    const size_t n = points.size();
    if (n < 2) return;
    size_t best = 0;
    for (size_t s = 1; s < n; ++s) {
        for (size_t i = 0; i < n; ++i) {
            const uint64_t a = points[(s + i) % n].key();
            const uint64_t b = points[(best + i) % n].key();
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    std::rotate(points.begin(), points.begin() + static_cast<ptrdiff_t>(best), points.end());
}

bool contour_less(const Contour& a, const Contour& b) {
    const size_t n = std::min(a.points.size(), b.points.size());
    for (size_t i = 0; i < n; ++i) {
        const uint64_t ka = a.points[i].key();
        const uint64_t kb = b.points[i].key();
        if (ka != kb) return ka < kb;
    }
    return a.points.size() < b.points.size();
}

double corner_average(const PixelGrid& g, const LatticePoint2& corner) {
    if (!(corner.x & 1) || !(corner.y & 1))
        throw std::invalid_argument("corner average needs a corner point");
    double sum = 0;
    for (int dy = 0; dy < 2; ++dy) {
        for (int dx = 0; dx < 2; ++dx) {
            const PixelIndex p{(corner.x - 1) / 2 + dx, (corner.y - 1) / 2 + dy};
            if (!g.in_domain(p))
                throw std::invalid_argument("corner average touches pixels outside the domain");
            sum += g.value(p);
        }
    }
    return sum / 4.0;
}

Vec2 contour_position(const ContourPoint& p, const PixelGrid& g, const IsoConfig& iso,
                      bool displace) {
    if (!displace || p.range.border) return p.id.world(g.spacing());
    const PixelIndex a = p.range.active;
    const PixelIndex i = p.range.inactive();
    const double t = interpolation_parameter(g.value(a), g.value(i), iso.isovalue);
    const Vec2 wa = a.lattice().world(g.spacing());
    const Vec2 wi = i.lattice().world(g.spacing());
    return wa + (wi - wa) * t;
}

double contour_area(const Contour& c) {
    // Shoelace over doubled coordinates; one lattice step is half a pixel.
    int64_t twice_doubled = 0;
    const size_t n = c.points.size();
    for (size_t i = 0; i < n; ++i) {
        const LatticePoint2& p = c.points[i].id;
        const LatticePoint2& q = c.points[(i + 1) % n].id;
        twice_doubled += int64_t(p.x) * q.y - int64_t(q.x) * p.y;
    }
    return static_cast<double>(twice_doubled) / 8.0;
}

namespace {

struct Segment {
    Range2 range;
    LatticePoint2 support;
    // Traversal direction: range rotated a quarter turn counterclockwise.
    int8_t tx, ty;

    LatticePoint2 head() const { return {support.x + tx, support.y + ty}; }
    LatticePoint2 tail() const { return {support.x - tx, support.y - ty}; }
};

struct CornerList {
    int32_t idx[4];
    uint8_t n = 0;
};

}  // namespace

std::vector<Contour> trace_contours(const PixelGrid& g, const IsoConfig& iso,
                                    const ContourOptions& options) {
    std::vector<Segment> segments;
    for (int y = 0; y < g.ny(); ++y) {
        for (int x = 0; x < g.nx(); ++x) {
            const PixelIndex p{x, y};
            if (!is_active(g, iso, p)) continue;
            for (int axis = 0; axis < 2; ++axis) {
                for (int sign = -1; sign <= 1; sign += 2) {
                    Range2 r;
                    r.active = p;
                    r.axis = static_cast<uint8_t>(axis);
                    r.sign = static_cast<int8_t>(sign);
                    if (is_active(g, iso, r.inactive())) continue;
                    r.border = !g.in_domain(r.inactive());
                    Segment s;
                    s.range = r;
                    s.support = r.support_point();
                    const int rx = axis == 0 ? sign : 0;
                    const int ry = axis == 0 ? 0 : sign;
                    s.tx = static_cast<int8_t>(-ry);
                    s.ty = static_cast<int8_t>(rx);
                    segments.push_back(s);
                }
            }
        }
    }

    std::unordered_map<uint64_t, CornerList> outgoing;
    outgoing.reserve(segments.size());
    for (size_t i = 0; i < segments.size(); ++i) {
        CornerList& list = outgoing[segments[i].tail().packed()];
        if (list.n == 4) throw std::logic_error("more than four contour vectors at a corner");
        list.idx[list.n++] = static_cast<int32_t>(i);
    }

    const double threshold = options.mixed_threshold.value_or(iso.isovalue);
    const auto decide = [&](const LatticePoint2& corner) -> PoaDecision {
        switch (options.mode) {
            case PoaMode::disconnect:
                return PoaDecision::disconnect;
            case PoaMode::connect:
                return PoaDecision::connect;
            case PoaMode::mixed:
                return corner_average(g, corner) >= threshold ? PoaDecision::connect
                                                              : PoaDecision::disconnect;
        }
        throw std::logic_error("unreachable");
    };

    const auto successor = [&](const Segment& s) -> int32_t {
        const LatticePoint2 corner = s.head();
        const auto it = outgoing.find(corner.packed());
        if (it == outgoing.end()) throw std::logic_error("contour breaks at a corner");
        const CornerList& list = it->second;
        if (list.n == 1) return list.idx[0];
        if (list.n != 2) throw std::logic_error("corner with odd contour incidence");
        const PoaDecision d = decide(corner);
        int32_t chosen = -1;
        for (int k = 0; k < 2; ++k) {
            const Segment& cand = segments[static_cast<size_t>(list.idx[k])];
            const bool match = d == PoaDecision::disconnect
                                   ? cand.range.active == s.range.active
                                   : cand.range.inactive() == s.range.inactive();
            if (match) {
                if (chosen >= 0) throw std::logic_error("ambiguous contour successor");
                chosen = list.idx[k];
            }
        }
        if (chosen < 0) throw std::logic_error("no contour successor shares the deciding pixel");
        return chosen;
    };

    std::vector<bool> visited(segments.size(), false);
    std::vector<Contour> contours;
    for (size_t start = 0; start < segments.size(); ++start) {
        if (visited[start]) continue;
        Contour c;
        size_t cur = start;
        do {
            if (visited[cur]) throw std::logic_error("contour chains overlap");
            visited[cur] = true;
            c.points.push_back({segments[cur].support, segments[cur].range});
            cur = static_cast<size_t>(successor(segments[cur]));
        } while (cur != start);
        c.normalize();
        contours.push_back(std::move(c));
    }
    std::sort(contours.begin(), contours.end(), contour_less);
    return contours;
}

}  // namespace vesta
