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

#ifndef QBEZIER_STABILITY_HPP
#define QBEZIER_STABILITY_HPP

#include "qbezier/geometry.hpp"
#include "qbezier/qcalc.hpp"
#include "qbezier/tri_net.hpp"

#include <span>
#include <vector>

namespace qbezier {

// Conditioning of the q-Bernstein representation versus the classical
// Bernstein one. The change of basis from q-Bernstein to Bernstein has
// only nonnegative entries, which is exactly the condition under which
// the Bernstein representation is at least as well conditioned at every
// point of the triangle.

/// Coefficients c^r of the expansion
///   prod_{s=0}^{r-1} (1 - q^s u - q^s v)
///     = sum_{i+j+k=r} c^r_ijk u^i v^j (1-u-v)^k.
/// Built level by level with nonnegative updates only, so every
/// coefficient is >= 0 to the last bit for q in (0, 1].
CoefficientNet product_expansion(int r, QParam q);

/// Dense change-of-basis matrix from the q-Bernstein basis (columns) to
/// the classical Bernstein basis (rows) at the same degree. Rows and
/// columns are indexed by triples in the canonical (i desc, j desc)
/// order. All entries are nonnegative, and every row sums to 1: the
/// constant 1 has all-ones coefficients in both bases, so A maps the
/// all-ones vector to itself.
struct BasisMatrix {
    int degree = 0;
    std::size_t side = 1;
    std::vector<double> entries; // row-major

    double& at(std::size_t row, std::size_t col) { return entries[row * side + col]; }
    double at(std::size_t row, std::size_t col) const { return entries[row * side + col]; }
};

BasisMatrix qbernstein_to_bernstein_matrix(int n, QParam q);

/// c_bernstein = A c_q, componentwise on the coefficient vector in
/// canonical order.
std::vector<double> to_bernstein_coefficients(const BasisMatrix& a,
                                              std::span<const double> q_coefficients);

/// Inverse conversion; solves the square system A c_q = c_bernstein.
std::vector<double> from_bernstein_coefficients(const BasisMatrix& a,
                                                std::span<const double> bernstein_coefficients);

/// Relative pointwise condition number sum_i |c_i| u_i(x) / sup_norm_f
/// for a nonnegative basis with values u_i(x) at the point of interest.
/// Throws std::domain_error unless sup_norm_f > 0.
double condition_number(std::span<const double> basis_values,
                        std::span<const double> coefficients, double sup_norm_f);

enum class BasisKind { Classical, QBernstein };

/// max |f| over the uniform barycentric grid of the given resolution;
/// a lower bound of the true sup-norm. The classical kind evaluates the
/// net as Bernstein coefficients (q = 1), the other as q-Bernstein.
/// Grid nodes are scanned in parallel; max is order-independent.
double sup_norm_estimate(const CoefficientNet& net, BasisKind basis, QParam q,
                         int resolution);

/// Single-threaded reference for sup_norm_estimate; same value.
double sup_norm_estimate_serial(const CoefficientNet& net, BasisKind basis, QParam q,
                                int resolution);

struct ConditioningEntry {
    DomainPoint point;
    double cond_bernstein = 0.0;
    double cond_q = 0.0;
    double ratio = 0.0; // cond_bernstein / cond_q
};

struct ConditioningReport {
    bool defined = true; // false when the sup-norm estimate is 0
    double sup_norm = 0.0;
    double max_ratio = 0.0;
    bool ordering_holds = true; // max_ratio <= 1 + tolerance
    std::vector<ConditioningEntry> entries;
};

/// Converts the net to the classical representation and compares the two
/// condition numbers at each point, sharing one sup-norm estimate so the
/// ratio is independent of the grid surrogate. Per-point work runs in
/// parallel. A zero sup-norm marks the report undefined, not an error.
ConditioningReport compare_conditioning(const CoefficientNet& net, QParam q,
                                        std::span<const DomainPoint> points,
                                        int sup_norm_resolution,
                                        double ratio_tolerance = 1e-10);

/// Single-threaded reference for compare_conditioning; same report.
ConditioningReport compare_conditioning_serial(const CoefficientNet& net, QParam q,
                                               std::span<const DomainPoint> points,
                                               int sup_norm_resolution,
                                               double ratio_tolerance = 1e-10);

} // namespace qbezier

#endif
