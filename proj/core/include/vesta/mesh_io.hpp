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

#include <string>

#include "vesta/mesh.hpp"

namespace vesta {

enum class MeshFormat : uint8_t {
    obj,
    ply,
};

// OBJ: ASCII `v x y z` lines then 1-based `f a b c` lines, outward faces
// counterclockwise.
void write_obj(const Mesh& m, const std::string& path);

// PLY binary_little_endian 1.0: float32 x/y/z vertices, faces as
// `list uchar int32` index triples.
void write_ply(const Mesh& m, const std::string& path);

// Reads the PLY layout written above.  File meshes carry no lattice keys,
// so points come back keyed by their index.
Mesh read_ply(const std::string& path);

void export_mesh(const Mesh& m, const std::string& path, MeshFormat format);

}  // namespace vesta
