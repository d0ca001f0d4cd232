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

#ifndef QBEZIER_BASIS_HPP
#define QBEZIER_BASIS_HPP

#include "qbezier/geometry.hpp"
#include "qbezier/qcalc.hpp"
#include "qbezier/tri_net.hpp"

#include <vector>

namespace qbezier {

// Triangular q-Bernstein basis functions
//
//   B^n_ijk(u, v) = qbinom(n, k) binom(i+j, i) u^i v^j
//                   prod_{s=0}^{k-1} (1 - q^s u - q^s v)
//
// nonnegative on the triangle for q in (0, 1] and reducing to the
// classical triangular Bernstein polynomials at q = 1. Three independent
// evaluation routes are kept: the product formula and two recurrences
// that lower the degree one step at a time. They agree up to rounding
// and cross-check each other in the tests.

/// Product-formula evaluation of a single basis function.
double basis_value(int n, MultiIndex3 idx, DomainPoint p, QParam q);

/// Degree recursion with third weight (q^{i+j} - q^{n-1} u - q^{n-1} v).
/// Not a convex-combination scheme; kept as a correctness cross-check.
double basis_value_rec_a(int n, MultiIndex3 idx, DomainPoint p, QParam q);

/// Degree recursion with weights (q^k u, q^k v, 1 - q^{k-1} u - q^{k-1} v).
double basis_value_rec_b(int n, MultiIndex3 idx, DomainPoint p, QParam q);

/// All (n+1)(n+2)/2 basis values in one pass, sharing the power tables
/// and building the k-fold product incrementally.
TriangularNet<double> basis_values(int n, DomainPoint p, QParam q);

/// Uniform barycentric grid {(a/m, b/m) : a, b >= 0, a + b <= m} in the
/// fixed row-major order: a ascending outer, b ascending inner.
class BarycentricGrid {
public:
    explicit BarycentricGrid(int resolution);

    int resolution() const noexcept { return m_; }
    std::size_t size() const noexcept { return nodes_.size(); }

    /// Grid numerators (a, b) of the node at the given flat position.
    std::pair<int, int> numerators(std::size_t flat) const { return nodes_[flat]; }

    DomainPoint point(std::size_t flat) const {
        const auto [a, b] = nodes_[flat];
        return {static_cast<double>(a) / m_, static_cast<double>(b) / m_};
    }

private:
    int m_;
    std::vector<std::pair<int, int>> nodes_;
};

struct GridSample {
    double u = 0.0;
    double v = 0.0;
    double value = 0.0;

    friend bool operator==(const GridSample&, const GridSample&) = default;
};

/// Samples B^n_idx on the uniform grid of the given resolution.
/// Grid nodes are evaluated in parallel; the output order is fixed and
/// independent of scheduling.
std::vector<GridSample> sample_basis_grid(int n, MultiIndex3 idx, QParam q,
                                          int resolution);

/// Single-threaded reference for sample_basis_grid; same output.
std::vector<GridSample> sample_basis_grid_serial(int n, MultiIndex3 idx, QParam q,
                                                 int resolution);

} // namespace qbezier

#endif
