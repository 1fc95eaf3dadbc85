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

#include <cstdint>

#include "vesta/grid.hpp"

namespace vesta {

// Deterministic test volumes.  Random generators draw raw engine words, so
// the same seed reproduces the same volume on any platform.

// Radial ramp: 255 inside 0.2*n, 0 outside 0.5*n, linear between, centered
// in an n^3 u8 grid.  At isovalue 127.5 the surface is a sphere of radius
// about 0.35*n.
ScalarGrid sphere_volume(int n);

// Each voxel 255 with probability p, else 0.
ScalarGrid random_binary_volume(int nx, int ny, int nz, double p, uint64_t seed);

// Uniform u8 noise.
ScalarGrid random_u8_volume(int nx, int ny, int nz, uint64_t seed);

// Small fixed demo: two overlapping spheres in a 9 x 9 x 14 stack.
ScalarGrid layered_demo_volume();

}  // namespace vesta
