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

#include "qbezier/elevation.hpp"

namespace qbezier {

namespace {

// Multiplies the represented polynomial by the linear form whose values
// at the triangle vertices are (c1, c2, c3), i.e. c1 u + c2 v + c3 w.
// Regrouped for the raising stencil, the per-k weights are
// (c1 - c3 + q^k c3, c2 - c3 + q^k c3, c3).
CoefficientNet multiply_linear_form(const CoefficientNet& net, double c1, double c2,
                                    double c3, QParam q) {
    const int n = net.degree();
    const auto qp = detail::q_powers(q.value(), n + 1);
    std::vector<double> uw(qp.size()), vw(qp.size()), ww(qp.size());
    for (std::size_t k = 0; k < qp.size(); ++k) {
        uw[k] = c1 - c3 + qp[k] * c3;
        vw[k] = c2 - c3 + qp[k] * c3;
        ww[k] = c3;
    }
    return detail::raise_degree(net, q, uw, vw, ww);
}

} // namespace

CoefficientNet monomial_to_qbernstein(int alpha, int beta, int n,
                                      const TriangleGeometry& geom, QParam q) {
    if (alpha < 0 || beta < 0) {
        throw std::range_error("monomial_to_qbernstein: negative exponent");
    }
    if (alpha + beta > n) {
        throw std::range_error("monomial_to_qbernstein: alpha + beta = " +
                               std::to_string(alpha + beta) +
                               " exceeds the target degree " + std::to_string(n));
    }
    CoefficientNet net(0);
    net.at(0, 0, 0) = 1.0;
    // All x factors first, then all y factors; the order is fixed so the
    // output is reproducible.
    for (int s = 0; s < alpha; ++s) {
        net = multiply_linear_form(net, geom.t1().x, geom.t2().x, geom.t3().x, q);
    }
    for (int s = 0; s < beta; ++s) {
        net = multiply_linear_form(net, geom.t1().y, geom.t2().y, geom.t3().y, q);
    }
    return elevate_to(net, n, q);
}

} // namespace qbezier
