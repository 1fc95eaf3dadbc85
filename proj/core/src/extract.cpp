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

#include "vesta/extract.hpp"

#include <stdexcept>

#include "vesta/marching.hpp"
#include "vesta/marching_cubes.hpp"
#include "vesta/trace.hpp"

namespace vesta {

ExtractResult extract(const ScalarGrid& g, const IsoConfig& iso, const ExtractOptions& options) {
    switch (options.engine) {
        case Engine::vesta_core: {
            TraceOptions to;
            to.mode = options.mode;
            to.mixed_threshold = options.mixed_threshold;
            ExtractResult r;
            r.cycles = trace_cycles(g, iso, to);
            TessellateOptions tess;
            tess.resolution = options.resolution;
            tess.displace = options.displace;
            tess.indexing = PointIndexing::shared;
            r.mesh = tessellate(r.cycles, g, iso, tess);
            return r;
        }
        case Engine::vesta_marching: {
            MarchOptions mo;
            mo.mode = options.mode;
            mo.mixed_threshold = options.mixed_threshold;
            mo.threads = options.threads;
            ExtractResult r;
            r.cycles = scan_volume(g, iso, mo);
            TessellateOptions tess;
            tess.resolution = options.resolution;
            tess.displace = options.displace;
            tess.indexing = PointIndexing::per_cycle;
            r.mesh = tessellate(r.cycles, g, iso, tess);
            return r;
        }
        case Engine::mc_classic:
        case Engine::mc_extended: {
            if (options.mode != PoaMode::disconnect || options.resolution != Resolution::low)
                throw std::invalid_argument(
                    "marching cubes supports only low resolution in disconnect mode");
            const McVariant variant =
                options.engine == Engine::mc_classic ? McVariant::classic15 : McVariant::extended;
            McResult mc = marching_cubes(g, iso, variant, options.displace);
            return {std::move(mc.cell_boundaries), std::move(mc.mesh)};
        }
    }
    throw std::logic_error("unreachable");
}

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::vesta_core: return "vesta-core";
        case Engine::vesta_marching: return "vesta-marching";
        case Engine::mc_classic: return "mc-classic";
        case Engine::mc_extended: return "mc-extended";
    }
    throw std::logic_error("unreachable");
}

const char* mode_name(PoaMode m) {
    switch (m) {
        case PoaMode::disconnect: return "disconnect";
        case PoaMode::connect: return "connect";
        case PoaMode::mixed: return "mixed";
    }
    throw std::logic_error("unreachable");
}

const char* resolution_name(Resolution r) {
    return r == Resolution::low ? "L" : "H";
}

std::optional<Engine> parse_engine(std::string_view name) {
    if (name == "vesta-core") return Engine::vesta_core;
    if (name == "vesta-marching") return Engine::vesta_marching;
    if (name == "mc-classic") return Engine::mc_classic;
    if (name == "mc-extended") return Engine::mc_extended;
    return std::nullopt;
}

std::optional<PoaMode> parse_mode(std::string_view name) {
    if (name == "disconnect") return PoaMode::disconnect;
    if (name == "connect") return PoaMode::connect;
    if (name == "mixed") return PoaMode::mixed;
    return std::nullopt;
}

std::optional<Resolution> parse_resolution(std::string_view name) {
    if (name == "L" || name == "l" || name == "low") return Resolution::low;
    if (name == "H" || name == "h" || name == "high") return Resolution::high;
    return std::nullopt;
}

}  // namespace vesta
