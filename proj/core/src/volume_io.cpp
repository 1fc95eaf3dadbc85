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

#include "vesta/volume_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vesta {

namespace {

namespace fs = std::filesystem;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

size_t value_width(ValueKind kind) {
    switch (kind) {
        case ValueKind::u8: return 1;
        case ValueKind::u16: return 2;
        case ValueKind::f32: return 4;
    }
    throw std::logic_error("unreachable");
}

const char* kind_name(ValueKind kind) {
    switch (kind) {
        case ValueKind::u8: return "u8";
        case ValueKind::u16: return "u16";
        case ValueKind::f32: return "f32";
    }
    throw std::logic_error("unreachable");
}

std::vector<char> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) fail(path, "cannot open");
    const std::streamsize size = in.tellg();
    in.seekg(0);
    std::vector<char> bytes(static_cast<size_t>(size));
    if (size > 0 && !in.read(bytes.data(), size)) fail(path, "read failed");
    return bytes;
}

}  // namespace

VolumeHeader parse_volume_header(const std::string& text) {
    VolumeHeader h;
    bool have_dims = false;
    bool have_kind = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("header line " + std::to_string(lineno) +
                                     ": expected key: value");
        const std::string key = line.substr(first, colon - first);
        std::istringstream value(line.substr(colon + 1));
        if (key == "dims") {
            if (!(value >> h.nx >> h.ny >> h.nz))
                throw std::runtime_error("header: dims needs three integers");
            have_dims = true;
        } else if (key == "kind") {
            std::string kind;
            value >> kind;
            if (kind == "u8") h.kind = ValueKind::u8;
            else if (kind == "u16") h.kind = ValueKind::u16;
            else if (kind == "f32") h.kind = ValueKind::f32;
            else throw std::runtime_error("header: unknown value kind: " + kind);
            have_kind = true;
        } else if (key == "spacing") {
            if (!(value >> h.spacing.x >> h.spacing.y >> h.spacing.z))
                throw std::runtime_error("header: spacing needs three numbers");
        } else if (key == "data") {
            value >> std::ws;
            std::getline(value, h.data);
            while (!h.data.empty() && (h.data.back() == ' ' || h.data.back() == '\t'))
                h.data.pop_back();
        } else {
            throw std::runtime_error("header: unknown key: " + key);
        }
    }
    if (!have_dims) throw std::runtime_error("header: missing dims");
    if (!have_kind) throw std::runtime_error("header: missing kind");
    if (h.nx <= 0 || h.ny <= 0 || h.nz <= 0)
        throw std::runtime_error("header: dims must be positive");
    if (h.data.empty()) throw std::runtime_error("header: missing data");
    return h;
}

ScalarGrid load_volume(const std::string& header_path) {
    std::ifstream in(header_path);
    if (!in) fail(header_path, "cannot open");
    std::stringstream text;
    text << in.rdbuf();
    const VolumeHeader h = parse_volume_header(text.str());

    fs::path payload = h.data;
    if (payload.is_relative()) payload = fs::path(header_path).parent_path() / payload;

    const std::vector<char> bytes = read_file(payload.string());
    const size_t count = size_t(h.nx) * size_t(h.ny) * size_t(h.nz);
    if (bytes.size() != count * value_width(h.kind))
        fail(payload.string(), "payload size does not match header dims");

    switch (h.kind) {
        case ValueKind::u8: {
            std::vector<uint8_t> v(count);
            std::memcpy(v.data(), bytes.data(), bytes.size());
            return ScalarGrid::from_u8(h.nx, h.ny, h.nz, std::move(v), h.spacing);
        }
        case ValueKind::u16: {
            std::vector<uint16_t> v(count);
            std::memcpy(v.data(), bytes.data(), bytes.size());
            return ScalarGrid::from_u16(h.nx, h.ny, h.nz, std::move(v), h.spacing);
        }
        case ValueKind::f32: {
            std::vector<float> v(count);
            std::memcpy(v.data(), bytes.data(), bytes.size());
            return ScalarGrid::from_f32(h.nx, h.ny, h.nz, std::move(v), h.spacing);
        }
    }
    throw std::logic_error("unreachable");
}

void write_volume(const ScalarGrid& g, const std::string& header_path,
                  const std::string& payload_path) {
    {
        std::ofstream out(payload_path, std::ios::binary);
        if (!out) fail(payload_path, "cannot open for writing");
        const char* bytes = nullptr;
        size_t size = 0;
        switch (g.kind()) {
            case ValueKind::u8:
                bytes = reinterpret_cast<const char*>(g.u8_data().data());
                size = g.u8_data().size();
                break;
            case ValueKind::u16:
                bytes = reinterpret_cast<const char*>(g.u16_data().data());
                size = g.u16_data().size() * 2;
                break;
            case ValueKind::f32:
                bytes = reinterpret_cast<const char*>(g.f32_data().data());
                size = g.f32_data().size() * 4;
                break;
        }
        out.write(bytes, static_cast<std::streamsize>(size));
        if (!out.flush()) fail(payload_path, "write failed");
    }

    std::ofstream out(header_path);
    if (!out) fail(header_path, "cannot open for writing");
    out.precision(17);
    out << "dims: " << g.nx() << ' ' << g.ny() << ' ' << g.nz() << '\n'
        << "kind: " << kind_name(g.kind()) << '\n'
        << "spacing: " << g.spacing().x << ' ' << g.spacing().y << ' ' << g.spacing().z << '\n'
        << "data: " << fs::path(payload_path).filename().string() << '\n';
    if (!out.flush()) fail(header_path, "write failed");
}

namespace {

struct PgmImage {
    int width = 0, height = 0, maxval = 0;
    std::vector<uint16_t> pixels;  // row 0 first
};

PgmImage read_pgm(const std::string& path) {
    const std::vector<char> bytes = read_file(path);
    size_t pos = 0;
    const auto token = [&]() -> std::string {
        // Whitespace and # comments separate header tokens.
        while (pos < bytes.size()) {
            const char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
        const size_t start = pos;
        while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
        if (start == pos) fail(path, "truncated header");
        return std::string(bytes.begin() + static_cast<ptrdiff_t>(start),
                           bytes.begin() + static_cast<ptrdiff_t>(pos));
    };

    if (token() != "P5") fail(path, "not a binary PGM (P5) file");
    PgmImage img;
    try {
        img.width = std::stoi(token());
        img.height = std::stoi(token());
        img.maxval = std::stoi(token());
    } catch (const std::exception&) {
        fail(path, "malformed header");
    }
    if (img.width <= 0 || img.height <= 0) fail(path, "bad dimensions");
    if (img.maxval <= 0 || img.maxval > 65535) fail(path, "bad maxval");
    ++pos;  // single whitespace after maxval

    const size_t count = size_t(img.width) * size_t(img.height);
    const bool wide = img.maxval > 255;
    if (bytes.size() - pos != count * (wide ? 2 : 1)) fail(path, "payload size mismatch");
    img.pixels.resize(count);
    if (wide) {
        // Sixteen-bit PGM samples are big-endian.
        for (size_t i = 0; i < count; ++i) {
            const auto hi = static_cast<uint8_t>(bytes[pos + 2 * i]);
            const auto lo = static_cast<uint8_t>(bytes[pos + 2 * i + 1]);
            img.pixels[i] = static_cast<uint16_t>((hi << 8) | lo);
        }
    } else {
        for (size_t i = 0; i < count; ++i)
            img.pixels[i] = static_cast<uint8_t>(bytes[pos + i]);
    }
    return img;
}

}  // namespace

ScalarGrid load_pgm_stack(const std::string& directory) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() == ".pgm") files.push_back(entry.path().string());
    }
    if (files.empty()) fail(directory, "no .pgm slices found");
    std::sort(files.begin(), files.end());

    const PgmImage first = read_pgm(files[0]);
    const bool wide = first.maxval > 255;
    const int nx = first.width;
    const int ny = first.height;
    const int nz = static_cast<int>(files.size());
    const size_t layer = size_t(nx) * size_t(ny);

    std::vector<uint8_t> u8;
    std::vector<uint16_t> u16;
    if (wide) u16.resize(layer * size_t(nz));
    else u8.resize(layer * size_t(nz));

    for (int z = 0; z < nz; ++z) {
        const PgmImage img = z == 0 ? first : read_pgm(files[static_cast<size_t>(z)]);
        if (img.width != nx || img.height != ny)
            fail(files[static_cast<size_t>(z)], "slice size differs from the first slice");
        if ((img.maxval > 255) != wide)
            fail(files[static_cast<size_t>(z)], "slice depth differs from the first slice");
        for (size_t i = 0; i < layer; ++i) {
            if (wide) u16[size_t(z) * layer + i] = img.pixels[i];
            else u8[size_t(z) * layer + i] = static_cast<uint8_t>(img.pixels[i]);
        }
    }
    if (wide) return ScalarGrid::from_u16(nx, ny, nz, std::move(u16));
    return ScalarGrid::from_u8(nx, ny, nz, std::move(u8));
}

ScalarGrid load_volume_any(const std::string& path) {
    if (fs::is_directory(path)) return load_pgm_stack(path);
    return load_volume(path);
}

}  // namespace vesta
