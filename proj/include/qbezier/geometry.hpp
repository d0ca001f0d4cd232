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

#ifndef QBEZIER_GEOMETRY_HPP
#define QBEZIER_GEOMETRY_HPP

namespace qbezier {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

/// Point of the parameter domain in barycentric coordinates (u, v),
/// with the third coordinate w = 1 - u - v implied. The basis and the
/// evaluation algorithms are defined for any real (u, v); convexity
/// guarantees hold only inside the triangle.
struct DomainPoint {
    double u = 0.0;
    double v = 0.0;

    double w() const noexcept { return 1.0 - u - v; }

    bool inside_triangle(double slack = 0.0) const noexcept {
        return u >= -slack && v >= -slack && u + v <= 1.0 + slack;
    }

    friend bool operator==(const DomainPoint&, const DomainPoint&) = default;
};

/// Nondegenerate triangle in the Cartesian plane. Construction rejects
/// vertex triples with zero signed area.
class TriangleGeometry {
public:
    TriangleGeometry(Vec2 t1, Vec2 t2, Vec2 t3);

    Vec2 t1() const noexcept { return t1_; }
    Vec2 t2() const noexcept { return t2_; }
    Vec2 t3() const noexcept { return t3_; }

    /// Twice the signed area; nonzero by construction.
    double doubled_area() const noexcept;

    /// The triangle with vertices (1,0), (0,1), (0,0), on which the
    /// barycentric map is the identity (x, y) -> (u, v).
    static TriangleGeometry reference();

private:
    Vec2 t1_, t2_, t3_;
};

/// Barycentric coordinates (u, v) of P, so that
/// P = u T1 + v T2 + (1 - u - v) T3. Solved from the 2x2 linear system.
DomainPoint barycentric_from_cartesian(const TriangleGeometry& geom, Vec2 p);

} // namespace qbezier

#endif
