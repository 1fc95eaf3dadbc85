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

#include "vesta/grid.hpp"

namespace vesta {

// Volume container: a small key/value text header next to a raw payload.
//
//   # lines starting with # are comments
//   dims: 64 64 64
//   kind: u8            (u8 | u16 | f32, payload little-endian)
//   spacing: 1 1 1      (optional, defaults to 1 1 1)
//   data: volume.raw    (relative to the header's directory)
//
// The payload stores values x-fastest, then y, then z, and its size must be
// exactly nx*ny*nz times the value width.
struct VolumeHeader {
    int nx = 0, ny = 0, nz = 0;
    ValueKind kind = ValueKind::u8;
    Vec3 spacing{1, 1, 1};
    std::string data;
};

VolumeHeader parse_volume_header(const std::string& text);

ScalarGrid load_volume(const std::string& header_path);

// Writes the payload to `payload_path` and a header beside it referencing
// the payload by filename.
void write_volume(const ScalarGrid& g, const std::string& header_path,
                  const std::string& payload_path);

// Loads a directory of binary PGM (P5) slices, stacked along z in
// lexicographic filename order.  Maxval up to 255 loads as u8, larger as
// u16.  All slices must agree on size and depth.
ScalarGrid load_pgm_stack(const std::string& directory);

// Header file or slice directory, decided by the path type.
ScalarGrid load_volume_any(const std::string& path);

}  // namespace vesta
