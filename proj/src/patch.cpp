// Copyright 2026 The qbezier Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbezier/patch.hpp"

#include "qbezier/basis.hpp"
#include "qbezier/decasteljau.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qbezier {

Vec3 patch_eval(const ControlNet3D& net, DomainPoint p, QParam q) {
    return decasteljau_evaluate(net, p, q);
}

Vec3 boundary_curve(const ControlNet3D& net, PatchEdge edge, double t, QParam q) {
    DomainPoint p{};
    switch (edge) {
    case PatchEdge::VEqualsZero:
        p = {t, 0.0};
        break;
    case PatchEdge::UEqualsZero:
        p = {0.0, t};
        break;
    case PatchEdge::WEqualsZero:
        p = {t, 1.0 - t};
        break;
    }
    return patch_eval(net, p, q);
}

namespace {

// Vertex index of grid node (a, b): rows a = 0..m, row a holds m - a + 1
// nodes.
int vertex_index(int m, int a, int b) {
    return a * (m + 1) - a * (a - 1) / 2 + b;
}

TessellationMesh tessellate_impl(const ControlNet3D& net, QParam q, int m,
                                 bool parallel) {
    const BarycentricGrid grid(m);
    TessellationMesh mesh;
    mesh.vertices.resize(grid.size());
    mesh.parameters.resize(grid.size());

    const auto count = static_cast<std::ptrdiff_t>(grid.size());
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t f = 0; f < count; ++f) {
            const DomainPoint p = grid.point(static_cast<std::size_t>(f));
            mesh.vertices[static_cast<std::size_t>(f)] = decasteljau_evaluate(net, p, q);
            mesh.parameters[static_cast<std::size_t>(f)] = {p.u, p.v};
        }
    } else {
        for (std::ptrdiff_t f = 0; f < count; ++f) {
            const DomainPoint p = grid.point(static_cast<std::size_t>(f));
            mesh.vertices[static_cast<std::size_t>(f)] = decasteljau_evaluate(net, p, q);
            mesh.parameters[static_cast<std::size_t>(f)] = {p.u, p.v};
        }
    }

    // Two triangles per interior cell: the upward one always, the
    // downward one when it fits. m*m faces in total.
    mesh.faces.reserve(static_cast<std::size_t>(m) * m);
    for (int a = 0; a + 1 <= m; ++a) {
        for (int b = 0; a + b + 1 <= m; ++b) {
            mesh.faces.push_back({vertex_index(m, a, b), vertex_index(m, a + 1, b),
                                  vertex_index(m, a, b + 1)});
            if (a + b + 2 <= m) {
                mesh.faces.push_back({vertex_index(m, a + 1, b),
                                      vertex_index(m, a + 1, b + 1),
                                      vertex_index(m, a, b + 1)});
            }
        }
    }
    return mesh;
}

} // namespace

TessellationMesh tessellate(const ControlNet3D& net, QParam q, int resolution) {
    return tessellate_impl(net, q, resolution, true);
}

TessellationMesh tessellate_serial(const ControlNet3D& net, QParam q, int resolution) {
    return tessellate_impl(net, q, resolution, false);
}

void write_obj(const TessellationMesh& mesh, std::ostream& out) {
    char line[128];
    for (const Vec3& v : mesh.vertices) {
        std::snprintf(line, sizeof line, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
        out << line;
    }
    for (const auto& f : mesh.faces) {
        std::snprintf(line, sizeof line, "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
        out << line;
    }
}

} // namespace qbezier
