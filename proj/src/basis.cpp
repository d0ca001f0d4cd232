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

#include "qbezier/basis.hpp"

#include <stdexcept>
#include <string>

namespace qbezier {

namespace {

void require_valid(int n, MultiIndex3 idx, const char* where) {
    if (n < 0 || n > kMaxDegree) {
        throw std::range_error(std::string(where) + ": degree " +
                               std::to_string(n) + " out of range");
    }
    if (!idx.valid_for(n)) {
        throw std::out_of_range(std::string(where) + ": index triple invalid for degree " +
                                std::to_string(n));
    }
}

// Powers q^0 .. q^n by iterated multiplication; exact at q = 1.
std::vector<double> power_table(double q, int n) {
    std::vector<double> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1.0;
    for (int s = 1; s <= n; ++s) {
        p[s] = p[s - 1] * q;
    }
    return p;
}

} // namespace

double basis_value(int n, MultiIndex3 idx, DomainPoint p, QParam q) {
    require_valid(n, idx, "basis_value");
    double product = 1.0;
    double qs = 1.0;
    for (int s = 0; s < idx.k; ++s) {
        product *= 1.0 - qs * p.u - qs * p.v;
        qs *= q.value();
    }
    double monomial = 1.0;
    for (int s = 0; s < idx.i; ++s) {
        monomial *= p.u;
    }
    for (int s = 0; s < idx.j; ++s) {
        monomial *= p.v;
    }
    return q_binomial(n, idx.k, q) * binomial(idx.i + idx.j, idx.i) * monomial * product;
}

double basis_value_rec_a(int n, MultiIndex3 idx, DomainPoint p, QParam q) {
    require_valid(n, idx, "basis_value_rec_a");
    const auto qp = power_table(q.value(), n);
    TriangularNet<double> level(0);
    level.at(0, 0, 0) = 1.0;
    // Build every level up to n; entries with a negative source index
    // contribute nothing.
    for (int m = 1; m <= n; ++m) {
        TriangularNet<double> next(m);
        for_each_index(m, [&](const MultiIndex3& t) {
            double value = 0.0;
            if (t.i > 0) {
                value += p.u * level.at(t.i - 1, t.j, t.k);
            }
            if (t.j > 0) {
                value += p.v * level.at(t.i, t.j - 1, t.k);
            }
            if (t.k > 0) {
                value += (qp[t.i + t.j] - qp[m - 1] * p.u - qp[m - 1] * p.v) *
                         level.at(t.i, t.j, t.k - 1);
            }
            next.at(t) = value;
        });
        level = std::move(next);
    }
    return level.at(idx);
}

double basis_value_rec_b(int n, MultiIndex3 idx, DomainPoint p, QParam q) {
    require_valid(n, idx, "basis_value_rec_b");
    const auto qp = power_table(q.value(), n);
    TriangularNet<double> level(0);
    level.at(0, 0, 0) = 1.0;
    for (int m = 1; m <= n; ++m) {
        TriangularNet<double> next(m);
        for_each_index(m, [&](const MultiIndex3& t) {
            double value = 0.0;
            if (t.i > 0) {
                value += qp[t.k] * p.u * level.at(t.i - 1, t.j, t.k);
            }
            if (t.j > 0) {
                value += qp[t.k] * p.v * level.at(t.i, t.j - 1, t.k);
            }
            if (t.k > 0) {
                value += (1.0 - qp[t.k - 1] * p.u - qp[t.k - 1] * p.v) *
                         level.at(t.i, t.j, t.k - 1);
            }
            next.at(t) = value;
        });
        level = std::move(next);
    }
    return level.at(idx);
}

TriangularNet<double> basis_values(int n, DomainPoint p, QParam q) {
    if (n < 0 || n > kMaxDegree) {
        throw std::range_error("basis_values: degree " + std::to_string(n) +
                               " out of range");
    }
    const auto u_pow = power_table(p.u, n);
    const auto v_pow = power_table(p.v, n);

    // prod[k] = prod_{s=0}^{k-1} (1 - q^s u - q^s v), one multiply per level.
    std::vector<double> prod(static_cast<std::size_t>(n) + 1);
    std::vector<double> qbin(static_cast<std::size_t>(n) + 1);
    prod[0] = 1.0;
    double qs = 1.0;
    for (int k = 1; k <= n; ++k) {
        prod[k] = prod[k - 1] * (1.0 - qs * p.u - qs * p.v);
        qs *= q.value();
    }
    for (int k = 0; k <= n; ++k) {
        qbin[k] = q_binomial(n, k, q);
    }

    TriangularNet<double> out(n);
    for_each_index(n, [&](const MultiIndex3& m) {
        out.at(m) = qbin[m.k] * binomial(m.i + m.j, m.i) * u_pow[m.i] * v_pow[m.j] *
                    prod[m.k];
    });
    return out;
}

BarycentricGrid::BarycentricGrid(int resolution) : m_(resolution) {
    if (resolution < 1) {
        throw std::range_error("BarycentricGrid: resolution must be >= 1");
    }
    nodes_.reserve(tri_entry_count(resolution));
    for (int a = 0; a <= m_; ++a) {
        for (int b = 0; b <= m_ - a; ++b) {
            nodes_.emplace_back(a, b);
        }
    }
}

namespace {

std::vector<GridSample> sample_grid_impl(int n, MultiIndex3 idx, QParam q,
                                         int resolution, bool parallel) {
    require_valid(n, idx, "sample_basis_grid");
    const BarycentricGrid grid(resolution);
    std::vector<GridSample> out(grid.size());
    const auto count = static_cast<std::ptrdiff_t>(grid.size());
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t f = 0; f < count; ++f) {
            const DomainPoint p = grid.point(static_cast<std::size_t>(f));
            out[static_cast<std::size_t>(f)] = {p.u, p.v, basis_value(n, idx, p, q)};
        }
    } else {
        for (std::ptrdiff_t f = 0; f < count; ++f) {
            const DomainPoint p = grid.point(static_cast<std::size_t>(f));
            out[static_cast<std::size_t>(f)] = {p.u, p.v, basis_value(n, idx, p, q)};
        }
    }
    return out;
}

} // namespace

std::vector<GridSample> sample_basis_grid(int n, MultiIndex3 idx, QParam q,
                                          int resolution) {
    return sample_grid_impl(n, idx, q, resolution, true);
}

std::vector<GridSample> sample_basis_grid_serial(int n, MultiIndex3 idx, QParam q,
                                                 int resolution) {
    return sample_grid_impl(n, idx, q, resolution, false);
}

} // namespace qbezier
