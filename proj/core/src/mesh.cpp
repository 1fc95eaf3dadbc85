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

#include "vesta/mesh.hpp"

#include <numeric>
#include <unordered_map>

namespace vesta {

Mesh dedup_points(const Mesh& m) {
    Mesh out;
    out.triangle_source = m.triangle_source;

    std::unordered_map<uint64_t, uint32_t> index_of;
    index_of.reserve(m.points.size());
    std::vector<uint32_t> remap(m.points.size());
    for (size_t i = 0; i < m.points.size(); ++i) {
        auto [it, inserted] = index_of.try_emplace(m.points[i].key,
                                                   static_cast<uint32_t>(out.points.size()));
        if (inserted) out.points.push_back(m.points[i]);
        remap[i] = it->second;
    }

    out.triangles.reserve(m.triangles.size());
    for (const Triangle& t : m.triangles)
        out.triangles.push_back({remap[t.a], remap[t.b], remap[t.c]});
    return out;
}

size_t drop_degenerate_triangles(Mesh& m) {
    const bool sourced = m.triangle_source.size() == m.triangles.size();
    size_t kept = 0;
    for (size_t i = 0; i < m.triangles.size(); ++i) {
        const Triangle& t = m.triangles[i];
        bool degenerate = t.a == t.b || t.b == t.c || t.a == t.c;
        if (!degenerate) {
            const Vec3 d = cross(m.points[t.b].pos - m.points[t.a].pos,
                                 m.points[t.c].pos - m.points[t.a].pos);
            degenerate = d.x == 0.0 && d.y == 0.0 && d.z == 0.0;
        }
        if (degenerate) continue;
        m.triangles[kept] = t;
        if (sourced) m.triangle_source[kept] = m.triangle_source[i];
        ++kept;
    }
    const size_t removed = m.triangles.size() - kept;
    m.triangles.resize(kept);
    if (sourced) m.triangle_source.resize(kept);
    return removed;
}

namespace {

struct UnionFind {
    std::vector<uint32_t> parent;

    explicit UnionFind(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }

    uint32_t find(uint32_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }

    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

}  // namespace

std::vector<uint32_t> label_components(const Mesh& m, uint32_t* count) {
    UnionFind uf(m.points.size());
    for (const Triangle& t : m.triangles) {
        uf.unite(t.a, t.b);
        uf.unite(t.a, t.c);
    }

    std::unordered_map<uint32_t, uint32_t> compact;
    std::vector<uint32_t> labels;
    labels.reserve(m.triangles.size());
    for (const Triangle& t : m.triangles) {
        const uint32_t root = uf.find(t.a);
        auto [it, inserted] = compact.try_emplace(root, static_cast<uint32_t>(compact.size()));
        labels.push_back(it->second);
    }
    if (count) *count = static_cast<uint32_t>(compact.size());
    return labels;
}

}  // namespace vesta
