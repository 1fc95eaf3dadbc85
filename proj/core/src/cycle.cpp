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

#include "vesta/cycle.hpp"

#include <algorithm>

namespace vesta {

void SurfaceCycle::normalize() {
    size_t n = points.size();
    if (n < 2) return;
    // Pick the rotation with the lexicographically smallest key sequence.
    // Cycles are tiny (<= 12 points), so the quadratic scan is fine.
    size_t best = 0;
    for (size_t cand = 1; cand < n; ++cand) {
        for (size_t k = 0; k < n; ++k) {
            uint64_t a = points[(cand + k) % n].key();
            uint64_t b = points[(best + k) % n].key();
            if (a != b) {
                if (a < b) best = cand;
                break;
            }
        }
    }
    if (best != 0) {
        std::rotate(points.begin(), points.begin() + best, points.end());
    }
}

std::vector<uint64_t> SurfaceCycle::key_sequence() const {
    std::vector<uint64_t> keys(points.size());
    for (size_t i = 0; i < points.size(); ++i) keys[i] = points[i].key();
    return keys;
}

bool cycle_less(const SurfaceCycle& a, const SurfaceCycle& b) {
    const size_t na = a.points.size();
    const size_t nb = b.points.size();
    for (size_t i = 0, n = na < nb ? na : nb; i < n; ++i) {
        const uint64_t ka = a.points[i].key();
        const uint64_t kb = b.points[i].key();
        if (ka != kb) return ka < kb;
    }
    return na < nb;
}

CycleCensus census_of(const std::vector<SurfaceCycle>& cycles) {
    CycleCensus c;
    for (const auto& cy : cycles) ++c[cy.length()];
    return c;
}

}  // namespace vesta
