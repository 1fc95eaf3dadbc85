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

#include "vesta/synthetic.hpp"

#include <cmath>
#include <random>

namespace vesta {

ScalarGrid sphere_volume(int n) {
    std::vector<uint8_t> values(size_t(n) * size_t(n) * size_t(n));
    const double c = (n - 1) / 2.0;
    const double r_in = 0.2 * n;
    const double r_out = 0.5 * n;
    size_t i = 0;
    for (int z = 0; z < n; ++z) {
        for (int y = 0; y < n; ++y) {
            for (int x = 0; x < n; ++x, ++i) {
                const double r = std::sqrt((x - c) * (x - c) + (y - c) * (y - c) + (z - c) * (z - c));
                const double f = (r_out - r) / (r_out - r_in);
                const double clamped = f < 0 ? 0 : f > 1 ? 1 : f;
                values[i] = static_cast<uint8_t>(std::lround(255.0 * clamped));
            }
        }
    }
    return ScalarGrid::from_u8(n, n, n, std::move(values));
}

namespace {

// Uniform double in [0, 1) from the top 53 bits of one engine word.
double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ScalarGrid random_binary_volume(int nx, int ny, int nz, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<uint8_t> values(size_t(nx) * size_t(ny) * size_t(nz));
    for (auto& v : values) v = unit(rng) < p ? 255 : 0;
    return ScalarGrid::from_u8(nx, ny, nz, std::move(values));
}

ScalarGrid random_u8_volume(int nx, int ny, int nz, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<uint8_t> values(size_t(nx) * size_t(ny) * size_t(nz));
    for (auto& v : values) v = static_cast<uint8_t>(rng() >> 56);
    return ScalarGrid::from_u8(nx, ny, nz, std::move(values));
}

ScalarGrid layered_demo_volume() {
    const int nx = 9, ny = 9, nz = 14;
    std::vector<uint8_t> values(size_t(nx) * size_t(ny) * size_t(nz), 0);
    const auto ball = [&](double cx, double cy, double cz, double r) {
        size_t i = 0;
        for (int z = 0; z < nz; ++z)
            for (int y = 0; y < ny; ++y)
                for (int x = 0; x < nx; ++x, ++i) {
                    const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy) + (z - cz) * (z - cz);
                    if (d2 <= r * r) values[i] = 255;
                }
    };
    ball(4, 4, 4, 3.6);
    ball(4, 4, 9, 3.6);
    return ScalarGrid::from_u8(nx, ny, nz, std::move(values));
}

}  // namespace vesta
