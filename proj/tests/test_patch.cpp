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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbezier/patch.hpp"

#include "qbezier/decasteljau.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <sstream>

using qbezier::ControlNet3D;
using qbezier::DomainPoint;
using qbezier::MultiIndex3;
using qbezier::PatchEdge;
using qbezier::QParam;
using qbezier::TriangleGeometry;
using qbezier::Vec2;
using qbezier::Vec3;

namespace {

const double kSweep[] = {0.1, 0.5, 0.9, 1.0};

// Cubic saddle-like net used across the patch tests.
ControlNet3D cubic_net_a() {
    ControlNet3D net(3);
    const double third = 1.0 / 3.0;
    net.at(3, 0, 0) = {0, 0, 0};
    net.at(2, 1, 0) = {0, third, 0};
    net.at(1, 2, 0) = {0, 2 * third, 0.5};
    net.at(0, 3, 0) = {0, 1, 1};
    net.at(2, 0, 1) = {third, 0, 0};
    net.at(1, 1, 1) = {third, third, 0};
    net.at(0, 2, 1) = {third, 2 * third, 0};
    net.at(1, 0, 2) = {2 * third, 0, 0.5};
    net.at(0, 1, 2) = {2 * third, third, 0};
    net.at(0, 0, 3) = {1, 0, 1};
    return net;
}

} // namespace

TEST_CASE("barycentric conversion: vertices, centroid, reference triangle") {
    const TriangleGeometry geom({2.0, 1.0}, {5.0, 1.5}, {3.0, 4.0});

    const DomainPoint at_t1 = qbezier::barycentric_from_cartesian(geom, geom.t1());
    CHECK(at_t1.u == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(at_t1.v == doctest::Approx(0.0).epsilon(1e-14));

    const Vec2 centroid{(2.0 + 5.0 + 3.0) / 3.0, (1.0 + 1.5 + 4.0) / 3.0};
    const DomainPoint at_centroid = qbezier::barycentric_from_cartesian(geom, centroid);
    CHECK(at_centroid.u == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(at_centroid.v == doctest::Approx(1.0 / 3.0).epsilon(1e-13));

    const auto reference = TriangleGeometry::reference();
    const DomainPoint identity =
        qbezier::barycentric_from_cartesian(reference, {0.2, 0.3});
    CHECK(identity.u == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(identity.v == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("corner interpolation of the patch is exact") {
    const ControlNet3D net = cubic_net_a();
    for (double q : kSweep) {
        const QParam qp{q};
        CHECK(qbezier::patch_eval(net, {1.0, 0.0}, qp) == net.at(3, 0, 0));
        CHECK(qbezier::patch_eval(net, {0.0, 1.0}, qp) == net.at(0, 3, 0));
        CHECK(qbezier::patch_eval(net, {0.0, 0.0}, qp) == net.at(0, 0, 3));
    }
    // The (0,1) corner of this net sits at (0, 1, 1) regardless of q.
    CHECK(qbezier::patch_eval(net, {0.0, 1.0}, QParam{0.37}) == Vec3{0.0, 1.0, 1.0});
}

TEST_CASE("a constant net evaluates to the shared point everywhere") {
    std::mt19937 rng(811);
    const Vec3 c{1.5, -2.0, 0.25};
    const ControlNet3D net(4, c);
    for (int trial = 0; trial < 20; ++trial) {
        const DomainPoint p = oracles::random_triangle_point(rng);
        const Vec3 value = qbezier::patch_eval(net, p, QParam{0.6});
        CHECK(std::abs(value.x - c.x) <= 1e-14);
        CHECK(std::abs(value.y - c.y) <= 1e-14);
        CHECK(std::abs(value.z - c.z) <= 1e-14);
    }
}

TEST_CASE("q = 1 patch evaluation matches the classical summation") {
    std::mt19937 rng(812);
    for (int n : {1, 3, 5}) {
        const auto net = oracles::random_point_net(n, rng);
        for (int trial = 0; trial < 20; ++trial) {
            const DomainPoint p = oracles::random_triangle_point(rng);
            const Vec3 ours = qbezier::patch_eval(net, p, QParam{1.0});
            const Vec3 classical = oracles::classical_patch_eval(net, p.u, p.v);
            CHECK(std::abs(ours.x - classical.x) <= 1e-12);
            CHECK(std::abs(ours.y - classical.y) <= 1e-12);
            CHECK(std::abs(ours.z - classical.z) <= 1e-12);
        }
    }
}

TEST_CASE("affine invariance of patch evaluation") {
    std::mt19937 rng(813);
    const auto net = oracles::random_point_net(3, rng);
    auto transform = [](Vec3 p) {
        // A fixed affine map of 3-space.
        return Vec3{0.5 * p.x - 1.25 * p.y + 0.1 * p.z + 3.0,
                    2.0 * p.x + 0.75 * p.z - 1.0,
                    -p.x + 0.3 * p.y + 1.1 * p.z + 0.5};
    };
    ControlNet3D mapped(3);
    for (std::size_t s = 0; s < net.size(); ++s) {
        mapped[s] = transform(net[s]);
    }
    for (double q : kSweep) {
        for (int trial = 0; trial < 10; ++trial) {
            const DomainPoint p = oracles::random_triangle_point(rng);
            const Vec3 a = transform(qbezier::patch_eval(net, p, QParam{q}));
            const Vec3 b = qbezier::patch_eval(mapped, p, QParam{q});
            CHECK(std::abs(a.x - b.x) <= 1e-11);
            CHECK(std::abs(a.y - b.y) <= 1e-11);
            CHECK(std::abs(a.z - b.z) <= 1e-11);
        }
    }
}

TEST_CASE("boundary curves: corners, code path, collinear edge") {
    const ControlNet3D net = cubic_net_a();
    const QParam q{0.5};

    CHECK(qbezier::boundary_curve(net, PatchEdge::VEqualsZero, 0.0, q) == net.at(0, 0, 3));
    CHECK(qbezier::boundary_curve(net, PatchEdge::VEqualsZero, 1.0, q) == net.at(3, 0, 0));
    CHECK(qbezier::boundary_curve(net, PatchEdge::UEqualsZero, 1.0, q) == net.at(0, 3, 0));
    CHECK(qbezier::boundary_curve(net, PatchEdge::WEqualsZero, 0.0, q) == net.at(0, 3, 0));
    CHECK(qbezier::boundary_curve(net, PatchEdge::WEqualsZero, 1.0, q) == net.at(3, 0, 0));

    // Same code path as patch_eval: bit-for-bit equal.
    for (double t : {0.1, 0.5, 0.8}) {
        CHECK(qbezier::boundary_curve(net, PatchEdge::VEqualsZero, t, q) ==
              qbezier::patch_eval(net, {t, 0.0}, q));
        CHECK(qbezier::boundary_curve(net, PatchEdge::UEqualsZero, t, q) ==
              qbezier::patch_eval(net, {0.0, t}, q));
        CHECK(qbezier::boundary_curve(net, PatchEdge::WEqualsZero, t, q) ==
              qbezier::patch_eval(net, {t, 1.0 - t}, q));
    }

    // With collinear boundary points the edge stays on their segment.
    ControlNet3D segment(2);
    segment.at(2, 0, 0) = {0, 0, 0};
    segment.at(1, 0, 1) = {0.5, 0.5, 0.5};
    segment.at(0, 0, 2) = {1, 1, 1};
    segment.at(1, 1, 0) = {9, 9, 9};
    segment.at(0, 1, 1) = {9, 9, 9};
    segment.at(0, 2, 0) = {9, 9, 9};
    for (double t : {0.0, 0.25, 0.6, 1.0}) {
        const Vec3 value = qbezier::boundary_curve(segment, PatchEdge::VEqualsZero, t,
                                                   QParam{0.4});
        CHECK(std::abs(value.x - value.y) <= 1e-13);
        CHECK(std::abs(value.x - value.z) <= 1e-13);
        CHECK(value.x >= -1e-13);
        CHECK(value.x <= 1.0 + 1e-13);
    }
}

TEST_CASE("edge evaluation agrees with the univariate reduction componentwise") {
    const ControlNet3D net = cubic_net_a();
    std::vector<Vec3> edge(4);
    for (int i = 0; i <= 3; ++i) {
        edge[i] = net.at(i, 0, 3 - i); // (P_003, P_102, P_201, P_300)
    }
    for (double q : kSweep) {
        for (double t : {0.2, 0.5, 0.77}) {
            const Vec3 curve =
                qbezier::boundary_curve(net, PatchEdge::VEqualsZero, t, QParam{q});
            const Vec3 uni = qbezier::decasteljau_evaluate_univariate<Vec3>(
                edge, t, QParam{q});
            CHECK(std::abs(curve.x - uni.x) <= 1e-13);
            CHECK(std::abs(curve.y - uni.y) <= 1e-13);
            CHECK(std::abs(curve.z - uni.z) <= 1e-13);
        }
    }
}

TEST_CASE("tessellation counts and fixed small cases") {
    const ControlNet3D net = cubic_net_a();
    const auto tiny = qbezier::tessellate(net, QParam{0.5}, 1);
    REQUIRE(tiny.vertices.size() == 3);
    REQUIRE(tiny.faces.size() == 1);
    CHECK(tiny.vertices[0] == net.at(0, 0, 3)); // (u, v) = (0, 0)
    CHECK(tiny.vertices[1] == net.at(0, 3, 0)); // (0, 1)
    CHECK(tiny.vertices[2] == net.at(3, 0, 0)); // (1, 0)

    const auto mesh = qbezier::tessellate(net, QParam{0.5}, 4);
    CHECK(mesh.vertices.size() == 15);
    CHECK(mesh.faces.size() == 16);
    CHECK(mesh.parameters.size() == mesh.vertices.size());
    for (const auto& face : mesh.faces) {
        for (const int v : face) {
            CHECK(v >= 0);
            CHECK(v < static_cast<int>(mesh.vertices.size()));
        }
    }
}

TEST_CASE("a flat net tessellates into the plane") {
    // Control points laid out on z = 0; convex combinations stay there.
    ControlNet3D net(2);
    qbezier::for_each_index(2, [&](const MultiIndex3& m) {
        net.at(m) = {m.i / 2.0, m.j / 2.0, 0.0};
    });
    const auto mesh = qbezier::tessellate(net, QParam{1.0}, 8);
    for (const auto& v : mesh.vertices) {
        CHECK(v.z == 0.0);
    }
}

TEST_CASE("tessellation vertices stay in the control hull") {
    std::mt19937 rng(814);
    for (double q : {0.3, 0.8, 1.0}) {
        const auto net = oracles::random_point_net(3, rng);
        const auto mesh = qbezier::tessellate(net, QParam{q}, 9);
        for (std::size_t s = 0; s < mesh.vertices.size(); ++s) {
            const DomainPoint p{mesh.parameters[s].x, mesh.parameters[s].y};
            CHECK(oracles::in_control_hull(net, p, q, mesh.vertices[s], 1e-12));
        }
    }
}

TEST_CASE("OBJ output format") {
    ControlNet3D net(1);
    net.at(1, 0, 0) = {1, 0, 0};
    net.at(0, 1, 0) = {0, 1, 0};
    net.at(0, 0, 1) = {0, 0, 0.5};
    const auto mesh = qbezier::tessellate(net, QParam{1.0}, 1);
    std::ostringstream out;
    qbezier::write_obj(mesh, out);
    CHECK(out.str() == "v 0 0 0.5\nv 0 1 0\nv 1 0 0\nf 1 3 2\n");
}
