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

#include <optional>
#include <string_view>

#include "vesta/cycle.hpp"
#include "vesta/grid.hpp"
#include "vesta/mesh.hpp"
#include "vesta/tessellate.hpp"

namespace vesta {

// One entry point over all four extractors.  The engines differ in how
// they emit points: the whole-volume tracer shares points globally, the
// cell tracer gives each cycle its own copies, and the reference marching
// cubes emits three per triangle; dedup_points reduces any of them to the
// shared form.
enum class Engine : uint8_t {
    vesta_core,
    vesta_marching,
    mc_classic,
    mc_extended,
};

struct ExtractOptions {
    Engine engine = Engine::vesta_core;
    PoaMode mode = PoaMode::disconnect;
    Resolution resolution = Resolution::low;
    bool displace = true;
    std::optional<double> mixed_threshold;
    int threads = 1;  // cell tracer only
};

struct ExtractResult {
    // Surface cycles (per-cell triangle boundary loops for the marching
    // cubes reference): the census-level view of the output.
    std::vector<SurfaceCycle> cycles;
    Mesh mesh;
};

// Throws std::invalid_argument when a marching cubes engine is asked for a
// mode or resolution it does not have (anything but low/disconnect).
ExtractResult extract(const ScalarGrid& g, const IsoConfig& iso, const ExtractOptions& options);

const char* engine_name(Engine e);
const char* mode_name(PoaMode m);
const char* resolution_name(Resolution r);
std::optional<Engine> parse_engine(std::string_view name);
std::optional<PoaMode> parse_mode(std::string_view name);
std::optional<Resolution> parse_resolution(std::string_view name);

}  // namespace vesta
