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

#ifndef QBEZIER_ELEVATION_HPP
#define QBEZIER_ELEVATION_HPP

#include "qbezier/geometry.hpp"
#include "qbezier/qcalc.hpp"
#include "qbezier/tri_net.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace qbezier {

namespace detail {

// Shared raising stencil. A degree-n net is rewritten at degree n + 1 as
//
//   out_ijk = ([n+1-k]/[n+1]) (i/(i+j)) uw[k] in_{i-1,j,k}
//           + ([n+1-k]/[n+1]) (j/(i+j)) vw[k] in_{i,j-1,k}
//           + ([k]/[n+1])               ww[k] in_{i,j,k-1}
//
// with terms carrying a negative source index dropped. The fraction
// i/(i+j) is taken as 0 at i = j = 0, where both of its terms are
// dropped anyway. Degree elevation uses (uw, vw, ww) = (q^k, q^k, 1);
// multiplication by a linear form substitutes its own per-k weights.
template <LinearValue V>
TriangularNet<V> raise_degree(const TriangularNet<V>& net, QParam q,
                              std::span<const double> uw, std::span<const double> vw,
                              std::span<const double> ww) {
    const int n = net.degree();
    const double denom = q_integer(n + 1, q);
    TriangularNet<V> out(n + 1);
    for_each_index(n + 1, [&](const MultiIndex3& t) {
        const double ratio = q_integer(n + 1 - t.k, q) / denom;
        const double fi = t.i + t.j > 0 ? static_cast<double>(t.i) / (t.i + t.j) : 0.0;
        const double fj = t.i + t.j > 0 ? static_cast<double>(t.j) / (t.i + t.j) : 0.0;
        V value{};
        if (t.i > 0) {
            value = value + ratio * fi * uw[t.k] * net.at(t.i - 1, t.j, t.k);
        }
        if (t.j > 0) {
            value = value + ratio * fj * vw[t.k] * net.at(t.i, t.j - 1, t.k);
        }
        if (t.k > 0) {
            value = value + q_integer(t.k, q) / denom * ww[t.k] * net.at(t.i, t.j, t.k - 1);
        }
        out.at(t) = value;
    });
    return out;
}

inline std::vector<double> q_powers(double q, int n) {
    std::vector<double> p(static_cast<std::size_t>(n) + 1, 1.0);
    for (int s = 1; s <= n; ++s) {
        p[s] = p[s - 1] * q;
    }
    return p;
}

} // namespace detail

/// Rewrites a degree-n representation exactly in the degree-(n+1) basis.
/// The elevated net represents the same polynomial (respectively, the
/// same surface for point-valued nets).
template <LinearValue V>
TriangularNet<V> degree_elevate(const TriangularNet<V>& net, QParam q) {
    const auto qp = detail::q_powers(q.value(), net.degree() + 1);
    const std::vector<double> ones(qp.size(), 1.0);
    return detail::raise_degree(net, q, qp, qp, ones);
}

/// Iterated single-step elevation up to target_degree.
/// Throws std::range_error if target_degree < net.degree().
template <LinearValue V>
TriangularNet<V> elevate_to(const TriangularNet<V>& net, int target_degree, QParam q) {
    if (target_degree < net.degree()) {
        throw std::range_error("elevate_to: target degree " +
                               std::to_string(target_degree) +
                               " is below the net degree " +
                               std::to_string(net.degree()));
    }
    TriangularNet<V> out = net;
    while (out.degree() < target_degree) {
        out = degree_elevate(out, q);
    }
    return out;
}

/// Coefficient net c with x^alpha y^beta = sum c_ijk B^n_ijk(u, v) under
/// the barycentric map of `geom`. Built constructively: starting from the
/// constant 1, multiply by the linear form of x (alpha times) and of y
/// (beta times), each step raising the degree by one, then elevate to n.
/// Throws std::range_error if alpha + beta > n.
CoefficientNet monomial_to_qbernstein(int alpha, int beta, int n,
                                      const TriangleGeometry& geom, QParam q);

} // namespace qbezier

#endif
