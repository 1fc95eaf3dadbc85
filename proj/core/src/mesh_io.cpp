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

#include "vesta/mesh_io.hpp"

#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace vesta {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

}  // namespace

void write_obj(const Mesh& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(path, "cannot open for writing");
    out.precision(std::numeric_limits<double>::max_digits10);
    for (const MeshPoint& p : m.points)
        out << "v " << p.pos.x << ' ' << p.pos.y << ' ' << p.pos.z << '\n';
    for (const Triangle& t : m.triangles)
        out << "f " << t.a + 1 << ' ' << t.b + 1 << ' ' << t.c + 1 << '\n';
    if (!out.flush()) fail(path, "write failed");
}

void write_ply(const Mesh& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    out << "ply\nformat binary_little_endian 1.0\n"
        << "element vertex " << m.points.size() << '\n'
        << "property float x\nproperty float y\nproperty float z\n"
        << "element face " << m.triangles.size() << '\n'
        << "property list uchar int vertex_indices\nend_header\n";
    for (const MeshPoint& p : m.points) {
        const float xyz[3] = {static_cast<float>(p.pos.x), static_cast<float>(p.pos.y),
                              static_cast<float>(p.pos.z)};
        out.write(reinterpret_cast<const char*>(xyz), sizeof(xyz));
    }
    for (const Triangle& t : m.triangles) {
        const uint8_t n = 3;
        const int32_t abc[3] = {static_cast<int32_t>(t.a), static_cast<int32_t>(t.b),
                                static_cast<int32_t>(t.c)};
        out.write(reinterpret_cast<const char*>(&n), 1);
        out.write(reinterpret_cast<const char*>(abc), sizeof(abc));
    }
    if (!out.flush()) fail(path, "write failed");
}

Mesh read_ply(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");

    std::string line;
    if (!std::getline(in, line) || line != "ply") fail(path, "not a ply file");

    size_t vertices = 0;
    size_t faces = 0;
    bool little = false;
    int vertex_props = 0;
    bool in_vertex = false;
    bool face_list = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "comment") continue;
        if (word == "format") {
            std::string kind;
            ls >> kind;
            little = kind == "binary_little_endian";
            if (!little) fail(path, "unsupported ply format: " + kind);
        } else if (word == "element") {
            std::string kind;
            size_t count = 0;
            ls >> kind >> count;
            if (kind == "vertex") {
                vertices = count;
                in_vertex = true;
            } else if (kind == "face") {
                faces = count;
                in_vertex = false;
            } else {
                fail(path, "unsupported element: " + kind);
            }
        } else if (word == "property") {
            std::string a;
            ls >> a;
            if (a == "list") {
                std::string counter, index, name;
                ls >> counter >> index >> name;
                if (counter != "uchar" && counter != "uint8") fail(path, "unsupported list count type");
                if (index != "int" && index != "int32") fail(path, "unsupported list index type");
                if (name != "vertex_indices" && name != "vertex_index")
                    fail(path, "unsupported list property: " + name);
                face_list = true;
            } else {
                if (!in_vertex || a != "float") fail(path, "unsupported property layout");
                ++vertex_props;
            }
        } else if (word == "end_header") {
            break;
        } else {
            fail(path, "unexpected header line: " + line);
        }
    }
    if (vertex_props != 3) fail(path, "expected exactly x y z float properties");
    if (faces > 0 && !face_list) fail(path, "face element without index list");

    Mesh m;
    m.points.resize(vertices);
    for (size_t i = 0; i < vertices; ++i) {
        float xyz[3];
        if (!in.read(reinterpret_cast<char*>(xyz), sizeof(xyz))) fail(path, "truncated vertices");
        m.points[i] = {i, {xyz[0], xyz[1], xyz[2]}};
    }
    m.triangles.resize(faces);
    for (size_t i = 0; i < faces; ++i) {
        uint8_t n = 0;
        int32_t abc[3];
        if (!in.read(reinterpret_cast<char*>(&n), 1)) fail(path, "truncated faces");
        if (n != 3) fail(path, "only triangle faces are supported");
        if (!in.read(reinterpret_cast<char*>(abc), sizeof(abc))) fail(path, "truncated faces");
        for (int32_t v : abc)
            if (v < 0 || static_cast<size_t>(v) >= vertices) fail(path, "face index out of range");
        m.triangles[i] = {static_cast<uint32_t>(abc[0]), static_cast<uint32_t>(abc[1]),
                          static_cast<uint32_t>(abc[2])};
    }
    return m;
}

void export_mesh(const Mesh& m, const std::string& path, MeshFormat format) {
    if (format == MeshFormat::obj) write_obj(m, path);
    else write_ply(m, path);
}

}  // namespace vesta
