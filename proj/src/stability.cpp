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

#include "qbezier/stability.hpp"

#include "qbezier/basis.hpp"
#include "qbezier/decasteljau.hpp"
#include "qbezier/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qbezier {

CoefficientNet product_expansion(int r, QParam q) {
    if (r < 0) {
        throw std::range_error("product_expansion: negative order");
    }
    CoefficientNet coeffs(0);
    coeffs.at(0, 0, 0) = 1.0;
    double qt = 1.0; // q^t
    for (int t = 0; t < r; ++t) {
        // Absorb the factor (1 - q^t u - q^t v), rewritten as
        // (1-u-v) + (1-q^t) u + (1-q^t) v. No subtraction of positives:
        // nonnegativity is preserved bit for bit.
        const double g = 1.0 - qt;
        CoefficientNet next(t + 1);
        for_each_index(t + 1, [&](const MultiIndex3& m) {
            double value = 0.0;
            if (m.k > 0) {
                value += coeffs.at(m.i, m.j, m.k - 1);
            }
            if (m.i > 0) {
                value += g * coeffs.at(m.i - 1, m.j, m.k);
            }
            if (m.j > 0) {
                value += g * coeffs.at(m.i, m.j - 1, m.k);
            }
            next.at(m) = value;
        });
        coeffs = std::move(next);
        qt *= q.value();
    }
    return coeffs;
}

BasisMatrix qbernstein_to_bernstein_matrix(int n, QParam q) {
    if (n < 0 || n > kMaxDegree) {
        throw std::range_error("qbernstein_to_bernstein_matrix: degree out of range");
    }
    BasisMatrix a;
    a.degree = n;
    a.side = tri_entry_count(n);
    a.entries.assign(a.side * a.side, 0.0);

    std::vector<CoefficientNet> expansions;
    expansions.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        expansions.push_back(product_expansion(k, q));
    }

    std::size_t col = 0;
    for_each_index(n, [&](const MultiIndex3& c) {
        const double factor = q_binomial(n, c.k, q) * binomial(c.i + c.j, c.i);
        for_each_index(c.k, [&](const MultiIndex3& e) {
            const std::size_t row = tri_offset(n, c.i + e.i, e.k);
            const double multinomial =
                binomial(n, c.i + e.i) * binomial(n - c.i - e.i, c.j + e.j);
            a.at(row, col) += expansions[c.k].at(e) * factor / multinomial;
        });
        ++col;
    });
    return a;
}

std::vector<double> to_bernstein_coefficients(const BasisMatrix& a,
                                              std::span<const double> q_coefficients) {
    if (q_coefficients.size() != a.side) {
        throw std::invalid_argument("to_bernstein_coefficients: size mismatch");
    }
    std::vector<double> out(a.side, 0.0);
    for (std::size_t row = 0; row < a.side; ++row) {
        double sum = 0.0;
        for (std::size_t col = 0; col < a.side; ++col) {
            sum += a.at(row, col) * q_coefficients[col];
        }
        out[row] = sum;
    }
    return out;
}

std::vector<double> from_bernstein_coefficients(
    const BasisMatrix& a, std::span<const double> bernstein_coefficients) {
    if (bernstein_coefficients.size() != a.side) {
        throw std::invalid_argument("from_bernstein_coefficients: size mismatch");
    }
    return lu_solve(a.side, a.entries, bernstein_coefficients);
}

double condition_number(std::span<const double> basis_values,
                        std::span<const double> coefficients, double sup_norm_f) {
    if (!(sup_norm_f > 0.0)) {
        throw std::domain_error("condition_number: sup norm must be positive");
    }
    if (basis_values.size() != coefficients.size()) {
        throw std::invalid_argument("condition_number: size mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < basis_values.size(); ++i) {
        sum += std::abs(coefficients[i]) * basis_values[i];
    }
    return sum / sup_norm_f;
}

namespace {

double sup_norm_impl(const CoefficientNet& net, BasisKind basis, QParam q,
                     int resolution, bool parallel) {
    const QParam eval_q = basis == BasisKind::Classical ? QParam::classical() : q;
    const BarycentricGrid grid(resolution);
    const auto count = static_cast<std::ptrdiff_t>(grid.size());
    double result = 0.0;
    if (parallel) {
#pragma omp parallel for schedule(static) reduction(max : result)
        for (std::ptrdiff_t f = 0; f < count; ++f) {
            const double value =
                std::abs(decasteljau_evaluate(net, grid.point(static_cast<std::size_t>(f)), eval_q));
            result = std::max(result, value);
        }
    } else {
        for (std::ptrdiff_t f = 0; f < count; ++f) {
            const double value =
                std::abs(decasteljau_evaluate(net, grid.point(static_cast<std::size_t>(f)), eval_q));
            result = std::max(result, value);
        }
    }
    return result;
}

ConditioningReport compare_impl(const CoefficientNet& net, QParam q,
                                std::span<const DomainPoint> points,
                                int sup_norm_resolution, double ratio_tolerance,
                                bool parallel) {
    const int n = net.degree();
    ConditioningReport report;
    report.sup_norm = sup_norm_impl(net, BasisKind::QBernstein, q, sup_norm_resolution,
                                    parallel);
    report.entries.resize(points.size());
    if (report.sup_norm == 0.0) {
        report.defined = false;
        for (std::size_t e = 0; e < points.size(); ++e) {
            report.entries[e].point = points[e];
        }
        report.max_ratio = 0.0;
        return report;
    }

    const BasisMatrix a = qbernstein_to_bernstein_matrix(n, q);
    const std::vector<double> bernstein_coeffs =
        to_bernstein_coefficients(a, net.values());
    const auto count = static_cast<std::ptrdiff_t>(points.size());

    auto evaluate_entry = [&](std::ptrdiff_t e) {
        const DomainPoint p = points[static_cast<std::size_t>(e)];
        const auto values_q = basis_values(n, p, q);
        const auto values_classical = basis_values(n, p, QParam::classical());
        ConditioningEntry entry;
        entry.point = p;
        entry.cond_q = condition_number(values_q.values(), net.values(), report.sup_norm);
        entry.cond_bernstein =
            condition_number(values_classical.values(), bernstein_coeffs, report.sup_norm);
        if (entry.cond_q > 0.0) {
            entry.ratio = entry.cond_bernstein / entry.cond_q;
        } else {
            entry.ratio = entry.cond_bernstein == 0.0
                              ? 1.0
                              : std::numeric_limits<double>::infinity();
        }
        report.entries[static_cast<std::size_t>(e)] = entry;
    };

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t e = 0; e < count; ++e) {
            evaluate_entry(e);
        }
    } else {
        for (std::ptrdiff_t e = 0; e < count; ++e) {
            evaluate_entry(e);
        }
    }

    report.max_ratio = 0.0;
    for (const auto& entry : report.entries) {
        report.max_ratio = std::max(report.max_ratio, entry.ratio);
    }
    report.ordering_holds = report.max_ratio <= 1.0 + ratio_tolerance;
    return report;
}

} // namespace

double sup_norm_estimate(const CoefficientNet& net, BasisKind basis, QParam q,
                         int resolution) {
    return sup_norm_impl(net, basis, q, resolution, true);
}

double sup_norm_estimate_serial(const CoefficientNet& net, BasisKind basis, QParam q,
                                int resolution) {
    return sup_norm_impl(net, basis, q, resolution, false);
}

ConditioningReport compare_conditioning(const CoefficientNet& net, QParam q,
                                        std::span<const DomainPoint> points,
                                        int sup_norm_resolution,
                                        double ratio_tolerance) {
    return compare_impl(net, q, points, sup_norm_resolution, ratio_tolerance, true);
}

ConditioningReport compare_conditioning_serial(const CoefficientNet& net, QParam q,
                                               std::span<const DomainPoint> points,
                                               int sup_norm_resolution,
                                               double ratio_tolerance) {
    return compare_impl(net, q, points, sup_norm_resolution, ratio_tolerance, false);
}

} // namespace qbezier
