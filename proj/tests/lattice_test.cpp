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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "vesta/lattice.hpp"

using namespace vesta;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("vector algebra") {
    Vec3 x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    CHECK(cross(x, y) == z);
    CHECK(cross(y, x) == -z);
    CHECK(dot(Vec3{1, 2, 3}, Vec3{4, 5, 6}) == 32.0);
    CHECK((x + y) * 2.0 == Vec3{2, 2, 0});
    CHECK(norm(Vec3{3, 4, 0}) == 5.0);
}

TEST_CASE("packing round trip") {
    const std::vector<LatticePoint> points = {
        {0, 0, 0},   {1, 0, 0},     {0, -1, 0},      {-3, 7, 2},
        {2, 2, 2},   {-1, -1, -1},  {1023, -511, 9}, {100000, -100000, 1},
    };
    for (const auto& p : points) {
        const LatticePoint q = unpack_lattice(p.packed());
        CHECK(q.x == p.x);
        CHECK(q.y == p.y);
        CHECK(q.z == p.z);
        CHECK_FALSE(is_centroid_key(p.packed()));
    }
}

TEST_CASE("packed keys are distinct") {
    std::vector<uint64_t> keys;
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
            for (int z = -3; z <= 3; ++z) keys.push_back(LatticePoint{x, y, z}.packed());
    std::sort(keys.begin(), keys.end());
    CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("parity classifies doubled coordinates") {
    CHECK(LatticePoint{0, 0, 0}.odd_count() == 0);   // voxel center
    CHECK(LatticePoint{2, 4, -2}.odd_count() == 0);  // voxel center
    CHECK(LatticePoint{1, 0, 0}.odd_count() == 1);   // face center
    CHECK(LatticePoint{1, 1, 0}.odd_count() == 2);   // edge midpoint
    CHECK(LatticePoint{1, 1, 1}.odd_count() == 3);   // corner
}

TEST_CASE("world position halves doubled coordinates") {
    const LatticePoint p{2, -1, 4};
    const Vec3 w = p.world({1, 1, 1});
    CHECK(w == Vec3{1.0, -0.5, 2.0});
    const Vec3 s = p.world({2, 3, 4});
    CHECK(s == Vec3{2.0, -1.5, 8.0});
}

TEST_CASE("centroid keys live outside the lattice key space") {
    const uint64_t k0 = centroid_key(0);
    const uint64_t k1 = centroid_key(41);
    CHECK(is_centroid_key(k0));
    CHECK(is_centroid_key(k1));
    CHECK(k0 != k1);
    CHECK(centroid_key(41) == centroid_key(41));
}

TEST_CASE("2d points order y first") {
    const LatticePoint2 a{5, 0}, b{0, 1};
    CHECK(a < b);
    CHECK_FALSE(b < a);
    const LatticePoint2 c{-2, 1};
    CHECK(c < b);
    CHECK(LatticePoint2{3, -4}.packed() != LatticePoint2{-4, 3}.packed());
}

TEST_SUITE_END();
