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

#ifndef QBEZIER_DECASTELJAU_HPP
#define QBEZIER_DECASTELJAU_HPP

#include "qbezier/geometry.hpp"
#include "qbezier/qcalc.hpp"
#include "qbezier/tri_net.hpp"

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qbezier {

// Corner-cutting evaluation of q-Bezier representations. A degree-n net
// is reduced through n layers
//
//   f^(r)_ijk = q^k u f^(r-1)_{i+1,j,k} + q^k v f^(r-1)_{i,j+1,k}
//             + (1 - q^k u - q^k v) f^(r-1)_{i,j,k+1}
//
// until the single entry f^(n)_000 remains. Inside the triangle every
// step is a convex combination for q in (0, 1], which is what makes the
// scheme numerically stable. The same reduction applies verbatim to 3D
// control points, evaluated componentwise.

/// The three blending weights used at level index k. They sum to 1
/// identically; all three are nonnegative when p lies in the triangle.
struct ConvexWeights {
    double u_weight = 0.0;
    double v_weight = 0.0;
    double w_weight = 0.0;
};

inline ConvexWeights convex_weights(int k, DomainPoint p, QParam q) {
    double qk = 1.0;
    for (int s = 0; s < k; ++s) {
        qk *= q.value();
    }
    const double wu = qk * p.u;
    const double wv = qk * p.v;
    // Written as 1 - q^k u - q^k v, matching the reduction step exactly.
    return {wu, wv, 1.0 - wu - wv};
}

/// All intermediate layers of the reduction. Layer 0 is the input net;
/// layer r has degree n - r; layer n holds the evaluated value.
template <LinearValue V>
struct Tableau {
    std::vector<TriangularNet<V>> layers;

    const V& result() const { return layers.back().at(0, 0, 0); }
};

namespace detail {

// One reduction step: consumes a layer of degree d + 1, produces degree d.
// uw/vw/ww hold the per-k weights, precomputed once per evaluation.
template <LinearValue V>
TriangularNet<V> reduce_layer(const TriangularNet<V>& prev, int d,
                              std::span<const double> uw, std::span<const double> vw,
                              std::span<const double> ww) {
    TriangularNet<V> next(d);
    for_each_index(d, [&](const MultiIndex3& t) {
        next.at(t) = uw[t.k] * prev.at(t.i + 1, t.j, t.k) +
                     vw[t.k] * prev.at(t.i, t.j + 1, t.k) +
                     ww[t.k] * prev.at(t.i, t.j, t.k + 1);
    });
    return next;
}

inline void fill_weight_tables(int n, DomainPoint p, QParam q, std::vector<double>& uw,
                               std::vector<double>& vw, std::vector<double>& ww) {
    uw.resize(static_cast<std::size_t>(n) + 1);
    vw.resize(uw.size());
    ww.resize(uw.size());
    double qk = 1.0;
    for (int k = 0; k <= n; ++k) {
        uw[k] = qk * p.u;
        vw[k] = qk * p.v;
        ww[k] = 1.0 - uw[k] - vw[k];
        qk *= q.value();
    }
}

} // namespace detail

/// Evaluates the representation with coefficients `net` at p. Keeps two
/// rolling layers only; use decasteljau_tableau to retain intermediates.
template <LinearValue V>
V decasteljau_evaluate(const TriangularNet<V>& net, DomainPoint p, QParam q) {
    const int n = net.degree();
    std::vector<double> uw, vw, ww;
    detail::fill_weight_tables(n, p, q, uw, vw, ww);
    TriangularNet<V> layer = net;
    for (int r = 1; r <= n; ++r) {
        layer = detail::reduce_layer(layer, n - r, uw, vw, ww);
    }
    return layer.at(0, 0, 0);
}

/// Same reduction, returning every layer. The final layer's sole entry
/// equals decasteljau_evaluate bit for bit (identical arithmetic).
template <LinearValue V>
Tableau<V> decasteljau_tableau(const TriangularNet<V>& net, DomainPoint p, QParam q) {
    const int n = net.degree();
    std::vector<double> uw, vw, ww;
    detail::fill_weight_tables(n, p, q, uw, vw, ww);
    Tableau<V> tableau;
    tableau.layers.reserve(static_cast<std::size_t>(n) + 1);
    tableau.layers.push_back(net);
    for (int r = 1; r <= n; ++r) {
        tableau.layers.push_back(detail::reduce_layer(tableau.layers.back(), n - r, uw, vw, ww));
    }
    return tableau;
}

/// Univariate restriction (v = 0): coeffs[i] pairs with the basis
/// function of index i along the edge, i = 0..n. The reduction becomes
///
///   f^(r)_{i,k} = q^k t f^(r-1)_{i+1,k} + (1 - q^k t) f^(r-1)_{i,k+1}
///
/// with k = n - r - i, the one-variable corner-cutting scheme.
template <LinearValue V>
V decasteljau_evaluate_univariate(std::span<const V> coeffs, double t, QParam q) {
    if (coeffs.empty()) {
        throw std::range_error("decasteljau_evaluate_univariate: empty coefficients");
    }
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> qpow(static_cast<std::size_t>(n) + 1);
    qpow[0] = 1.0;
    for (int s = 1; s <= n; ++s) {
        qpow[s] = qpow[s - 1] * q.value();
    }
    std::vector<V> layer(coeffs.begin(), coeffs.end());
    for (int r = 1; r <= n; ++r) {
        for (int i = 0; i <= n - r; ++i) {
            const double wt = qpow[n - r - i] * t;
            layer[i] = wt * layer[i + 1] + (1.0 - wt) * layer[i];
        }
    }
    return layer[0];
}

inline double decasteljau_evaluate_univariate(std::span<const double> coeffs, double t,
                                              QParam q) {
    return decasteljau_evaluate_univariate<double>(coeffs, t, q);
}

} // namespace qbezier

#endif
