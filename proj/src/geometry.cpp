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

#include "qbezier/geometry.hpp"

#include "qbezier/tri_net.hpp"

#include <stdexcept>

namespace qbezier {

namespace {

double doubled_signed_area(Vec2 a, Vec2 b, Vec2 c) {
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

} // namespace

TriangleGeometry::TriangleGeometry(Vec2 t1, Vec2 t2, Vec2 t3)
    : t1_(t1), t2_(t2), t3_(t3) {
    if (doubled_signed_area(t1, t2, t3) == 0.0) {
        throw std::domain_error("TriangleGeometry: vertices are collinear");
    }
}

double TriangleGeometry::doubled_area() const noexcept {
    return doubled_signed_area(t1_, t2_, t3_);
}

TriangleGeometry TriangleGeometry::reference() {
    return TriangleGeometry{{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}};
}

DomainPoint barycentric_from_cartesian(const TriangleGeometry& geom, Vec2 p) {
    // P - T3 = u (T1 - T3) + v (T2 - T3), solved by Cramer's rule.
    const Vec2 e1 = geom.t1() - geom.t3();
    const Vec2 e2 = geom.t2() - geom.t3();
    const Vec2 rhs = p - geom.t3();
    const double det = e1.x * e2.y - e2.x * e1.y;
    if (det == 0.0) {
        throw std::domain_error("barycentric_from_cartesian: degenerate triangle");
    }
    const double u = (rhs.x * e2.y - e2.x * rhs.y) / det;
    const double v = (e1.x * rhs.y - rhs.x * e1.y) / det;
    return {u, v};
}

} // namespace qbezier
