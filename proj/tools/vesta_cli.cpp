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

// Command line front end.  Exit codes: 0 success, 1 validation failure,
// 2 input error (bad arguments, unreadable or malformed files).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vesta/bench.hpp"
#include "vesta/diconex.hpp"
#include "vesta/extract.hpp"
#include "vesta/mesh_io.hpp"
#include "vesta/meshcheck.hpp"
#include "vesta/synthetic.hpp"
#include "vesta/volume_io.hpp"

namespace {

using namespace vesta;

struct VolumeArgs {
    std::string input;
    std::string header;
};

// --input autodetects a header file or a PGM slice directory, --header
// forces the header path.
void add_volume_options(CLI::App* cmd, VolumeArgs* args) {
    auto* in = cmd->add_option("--input", args->input, "volume header file or PGM slice directory");
    auto* hdr = cmd->add_option("--header", args->header, "volume header file");
    in->excludes(hdr);
}

ScalarGrid load_grid(const VolumeArgs& args) {
    if (!args.header.empty()) return load_volume(args.header);
    if (!args.input.empty()) return load_volume_any(args.input);
    throw std::invalid_argument("no volume given (use --input or --header)");
}

Engine engine_of(const std::string& name) {
    auto e = parse_engine(name);
    if (!e) throw std::invalid_argument("unknown engine: " + name);
    return *e;
}

PoaMode mode_of(const std::string& name) {
    auto m = parse_mode(name);
    if (!m) throw std::invalid_argument("unknown mode: " + name);
    return *m;
}

Resolution resolution_of(const std::string& name) {
    auto r = parse_resolution(name);
    if (!r) throw std::invalid_argument("unknown resolution: " + name);
    return *r;
}

int axis_of(const std::string& name) {
    if (name.size() == 1) {
        switch (name[0]) {
            case 'x': case 'X': case '0': return 0;
            case 'y': case 'Y': case '1': return 1;
            case 'z': case 'Z': case '2': return 2;
            default: break;
        }
    }
    throw std::invalid_argument("unknown axis: " + name);
}

MeshFormat format_of(const std::string& flag, const std::string& path) {
    std::string name = flag;
    if (name.empty()) {
        auto ext = std::filesystem::path(path).extension().string();
        name = ext == ".ply" ? "ply" : "obj";
    }
    if (name == "obj") return MeshFormat::obj;
    if (name == "ply") return MeshFormat::ply;
    throw std::invalid_argument("unknown format: " + flag);
}

void print_census(std::ostream& out, const CycleCensus& census) {
    long sum = 0;
    for (const auto& [len, count] : census) {
        out << len << "-cycles: " << count << "\n";
        sum += count;
    }
    out << "cycle sum: " << sum << "\n";
}

struct ExtractArgs {
    VolumeArgs volume;
    double iso = 0;
    std::string engine = "vesta-core";
    std::string mode = "disconnect";
    std::string resolution = "L";
    bool dedup = false;
    bool drop_degenerate = false;
    bool no_displace = false;
    std::optional<double> mixed_threshold;
    int threads = 1;
    std::string output;
    std::string format;
};

ExtractOptions extract_options(const ExtractArgs& args) {
    ExtractOptions o;
    o.engine = engine_of(args.engine);
    o.mode = mode_of(args.mode);
    o.resolution = resolution_of(args.resolution);
    o.displace = !args.no_displace;
    o.mixed_threshold = args.mixed_threshold;
    o.threads = args.threads;
    return o;
}

void add_extract_options(CLI::App* cmd, ExtractArgs* args, bool full) {
    add_volume_options(cmd, &args->volume);
    cmd->add_option("--iso", args->iso, "isovalue (a voxel is active when value >= iso)")
        ->required();
    cmd->add_option("--engine", args->engine,
                    "vesta-core | vesta-marching | mc-classic | mc-extended");
    cmd->add_option("--mode", args->mode, "disconnect | connect | mixed");
    cmd->add_option("--mixed-threshold", args->mixed_threshold,
                    "edge average threshold for mixed mode (default: the isovalue)");
    cmd->add_option("--threads", args->threads, "worker threads (vesta-marching only)");
    if (!full) return;
    cmd->add_option("--resolution", args->resolution, "L | H");
    cmd->add_flag("--dedup", args->dedup, "merge points that share a lattice key");
    cmd->add_flag("--drop-degenerate", args->drop_degenerate,
                  "remove zero-area triangles after displacement");
    cmd->add_flag("--no-displace", args->no_displace,
                  "keep support points at edge midpoints");
    cmd->add_option("--output", args->output, "mesh file to write")->required();
    cmd->add_option("--format", args->format, "obj | ply (default: by output extension)");
}

int run_extract(const ExtractArgs& args) {
    ScalarGrid g = load_grid(args.volume);
    ExtractResult r = extract(g, IsoConfig{args.iso}, extract_options(args));
    if (args.dedup) r.mesh = dedup_points(r.mesh);
    size_t dropped = 0;
    if (args.drop_degenerate) dropped = drop_degenerate_triangles(r.mesh);
    MeshFormat format = format_of(args.format, args.output);
    export_mesh(r.mesh, args.output, format);
    std::cout << args.engine << " " << args.mode << " " << args.resolution << "\n";
    print_census(std::cout, census_of(r.cycles));
    std::cout << "points: " << r.mesh.point_count() << "\n"
              << "triangles: " << r.mesh.triangle_count() << "\n";
    if (args.drop_degenerate) std::cout << "degenerate triangles dropped: " << dropped << "\n";
    std::cout << "wrote " << args.output << "\n";
    return 0;
}

int run_census(const ExtractArgs& args) {
    ScalarGrid g = load_grid(args.volume);
    ExtractOptions o = extract_options(args);
    o.displace = false;
    ExtractResult r = extract(g, IsoConfig{args.iso}, o);
    print_census(std::cout, census_of(r.cycles));
    return 0;
}

struct ValidateArgs {
    std::string input;
    std::vector<double> spacing{1, 1, 1};
};

int run_validate(const ValidateArgs& args) {
    Mesh m = read_ply(args.input);
    Vec3 spacing{args.spacing[0], args.spacing[1], args.spacing[2]};
    ValidationReport report = validate(m, spacing);
    std::cout << to_text(report);
    return report.closed() ? 0 : 1;
}

struct SliceArgs {
    VolumeArgs volume;
    double iso = 0;
    std::string axis = "z";
    int layer = 0;
    std::string mode = "disconnect";
    std::optional<double> mixed_threshold;
    bool no_displace = false;
    std::string output;
};

int run_slice(const SliceArgs& args) {
    ScalarGrid g = load_grid(args.volume);
    PixelGrid slice = pixel_slice(g, axis_of(args.axis), args.layer);
    ContourOptions o;
    o.mode = mode_of(args.mode);
    o.mixed_threshold = args.mixed_threshold;
    IsoConfig iso{args.iso};
    auto contours = trace_contours(slice, iso, o);

    std::ofstream file;
    if (!args.output.empty()) {
        file.open(args.output);
        if (!file) throw std::runtime_error(args.output + ": cannot write");
    }
    std::ostream& out = args.output.empty() ? std::cout : file;
    out.precision(17);
    out << "contours: " << contours.size() << "\n";
    for (size_t i = 0; i < contours.size(); ++i) {
        const Contour& c = contours[i];
        out << "contour " << i << ": length " << c.length() << " area " << contour_area(c)
            << "\n";
        for (const ContourPoint& p : c.points) {
            Vec2 pos = contour_position(p, slice, iso, !args.no_displace);
            out << "  " << pos.x << " " << pos.y << "\n";
        }
    }
    if (!args.output.empty()) std::cout << "wrote " << args.output << "\n";
    return 0;
}

struct BenchArgs {
    VolumeArgs volume;
    double iso = 0;
    std::vector<std::string> engines{"vesta-core", "vesta-marching", "mc-classic",
                                     "mc-extended"};
    std::vector<std::string> modes{"disconnect", "connect", "mixed"};
    std::vector<std::string> resolutions{"L", "H"};
    int repeats = 3;
    int threads = 1;
    bool no_displace = false;
};

int run_bench_cmd(const BenchArgs& args) {
    ScalarGrid g = load_grid(args.volume);
    BenchConfig config;
    for (const auto& name : args.engines) config.engines.push_back(engine_of(name));
    for (const auto& name : args.modes) config.modes.push_back(mode_of(name));
    for (const auto& name : args.resolutions)
        config.resolutions.push_back(resolution_of(name));
    config.repeats = args.repeats;
    config.threads = args.threads;
    config.displace = !args.no_displace;
    auto records = run_bench(g, IsoConfig{args.iso}, config);
    std::cout << format_bench_table(records);
    return 0;
}

struct SynthArgs {
    std::string kind;
    std::vector<int> dims;
    double fill = 0.5;
    uint64_t seed = 1;
    std::string output;
};

int run_synth(const SynthArgs& args) {
    auto dims3 = [&](const char* kind) {
        if (args.dims.size() == 3) return std::array<int, 3>{args.dims[0], args.dims[1],
                                                             args.dims[2]};
        if (args.dims.size() == 1) return std::array<int, 3>{args.dims[0], args.dims[0],
                                                             args.dims[0]};
        throw std::invalid_argument(std::string(kind) + " needs --dims N or --dims NX NY NZ");
    };

    ScalarGrid g = [&] {
        if (args.kind == "sphere") return sphere_volume(dims3("sphere")[0]);
        if (args.kind == "random") {
            auto d = dims3("random");
            return random_binary_volume(d[0], d[1], d[2], args.fill, args.seed);
        }
        if (args.kind == "random-u8") {
            auto d = dims3("random-u8");
            return random_u8_volume(d[0], d[1], d[2], args.seed);
        }
        if (args.kind == "demo") return layered_demo_volume();
        throw std::invalid_argument("unknown kind: " + args.kind);
    }();

    std::filesystem::path header(args.output);
    std::filesystem::path payload = header;
    payload.replace_extension(".raw");
    if (payload == header) payload += ".raw";
    write_volume(g, header.string(), payload.string());
    std::cout << "wrote " << header.string() << " (" << g.nx() << "x" << g.ny() << "x"
              << g.nz() << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"volume to surface extraction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "vesta 1.0.0");

    int rc = 0;

    ExtractArgs extract_args;
    auto* extract_cmd = app.add_subcommand("extract", "extract a surface mesh from a volume");
    add_extract_options(extract_cmd, &extract_args, true);
    extract_cmd->callback([&] { rc = run_extract(extract_args); });

    ValidateArgs validate_args;
    auto* validate_cmd = app.add_subcommand("validate", "check a mesh file for closedness");
    validate_cmd->add_option("--input", validate_args.input, "binary PLY mesh")->required();
    validate_cmd->add_option("--spacing", validate_args.spacing, "voxel spacing sx sy sz")
        ->expected(3);
    validate_cmd->callback([&] { rc = run_validate(validate_args); });

    ExtractArgs census_args;
    auto* census_cmd = app.add_subcommand("census", "count surface cycles by length");
    add_extract_options(census_cmd, &census_args, false);
    census_cmd->callback([&] { rc = run_census(census_args); });

    SliceArgs slice_args;
    auto* slice_cmd = app.add_subcommand("slice", "trace 2D contours of one volume layer");
    add_volume_options(slice_cmd, &slice_args.volume);
    slice_cmd->add_option("--iso", slice_args.iso, "isovalue")->required();
    slice_cmd->add_option("--axis", slice_args.axis, "slice normal: x | y | z");
    slice_cmd->add_option("--layer", slice_args.layer, "voxel layer along the axis");
    slice_cmd->add_option("--mode", slice_args.mode, "disconnect | connect | mixed");
    slice_cmd->add_option("--mixed-threshold", slice_args.mixed_threshold,
                          "corner average threshold for mixed mode");
    slice_cmd->add_flag("--no-displace", slice_args.no_displace,
                        "keep contour points at edge midpoints");
    slice_cmd->add_option("--output", slice_args.output, "write contours to a file");
    slice_cmd->callback([&] { rc = run_slice(slice_args); });

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "time extraction engines");
    add_volume_options(bench_cmd, &bench_args.volume);
    bench_cmd->add_option("--iso", bench_args.iso, "isovalue")->required();
    bench_cmd->add_option("--engines", bench_args.engines, "engines to run");
    bench_cmd->add_option("--modes", bench_args.modes, "modes to run");
    bench_cmd->add_option("--resolutions", bench_args.resolutions, "resolutions to run");
    bench_cmd->add_option("--repeats", bench_args.repeats, "runs per configuration")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--threads", bench_args.threads, "worker threads (vesta-marching)");
    bench_cmd->add_flag("--no-displace", bench_args.no_displace, "skip displacement");
    bench_cmd->callback([&] { rc = run_bench_cmd(bench_args); });

    SynthArgs synth_args;
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic volume");
    synth_cmd->add_option("--kind", synth_args.kind, "sphere | random | random-u8 | demo")
        ->required();
    synth_cmd->add_option("--dims", synth_args.dims, "N or NX NY NZ");
    synth_cmd->add_option("--fill", synth_args.fill, "active fraction for random volumes");
    synth_cmd->add_option("--seed", synth_args.seed, "random seed");
    synth_cmd->add_option("--output", synth_args.output, "header file to write")->required();
    synth_cmd->callback([&] { rc = run_synth(synth_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "vesta: error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
