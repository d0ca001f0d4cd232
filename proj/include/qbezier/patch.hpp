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

#ifndef QBEZIER_PATCH_HPP
#define QBEZIER_PATCH_HPP

#include "qbezier/geometry.hpp"
#include "qbezier/qcalc.hpp"
#include "qbezier/tri_net.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace qbezier {

/// Triangular control net of 3D points, the data of a q-Bezier patch
/// Q(u, v) = sum P_ijk B^n_ijk(u, v).
using ControlNet3D = TriangularNet<Vec3>;

/// Componentwise corner-cutting evaluation of the patch at p.
Vec3 patch_eval(const ControlNet3D& net, DomainPoint p, QParam q);

/// The three boundary curves, named by the vanishing coordinate.
/// Parameterization: t runs toward the vertex with the larger first
/// nonzero index, so t = 0 and t = 1 land on control-net corners:
///   VEqualsZero: p = (t, 0)      t=0 -> P_00n, t=1 -> P_n00
///   UEqualsZero: p = (0, t)      t=0 -> P_00n, t=1 -> P_0n0
///   WEqualsZero: p = (t, 1 - t)  t=0 -> P_0n0, t=1 -> P_n00
enum class PatchEdge { VEqualsZero, UEqualsZero, WEqualsZero };

/// Patch evaluation restricted to an edge; same code path as patch_eval
/// at the corresponding (u, v).
Vec3 boundary_curve(const ControlNet3D& net, PatchEdge edge, double t, QParam q);

/// Triangle mesh sampled from a patch on the uniform barycentric grid.
/// Vertices follow the grid order (a ascending outer, b ascending inner);
/// parameter coordinates are aligned with vertices.
struct TessellationMesh {
    std::vector<Vec3> vertices;
    std::vector<Vec2> parameters;
    std::vector<std::array<int, 3>> faces; // 0-based vertex indices
};

/// Evaluates the patch on the resolution-m grid and connects each grid
/// cell with two triangles (m*m faces in total). Vertices are computed
/// in parallel; ordering is fixed, so the mesh is reproducible.
TessellationMesh tessellate(const ControlNet3D& net, QParam q, int resolution);

/// Single-threaded reference for tessellate; same mesh.
TessellationMesh tessellate_serial(const ControlNet3D& net, QParam q, int resolution);

/// Writes the mesh as OBJ text: one "v x y z" line per vertex in grid
/// order, one "f a b c" line (1-based) per face.
void write_obj(const TessellationMesh& mesh, std::ostream& out);

} // namespace qbezier

#endif
