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

#include "qbezier/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace qbezier {

std::vector<double> lu_solve(std::size_t n, std::vector<double> a,
                             std::span<const double> b) {
    if (a.size() != n * n || b.size() != n) {
        throw std::invalid_argument("lu_solve: dimension mismatch");
    }
    std::vector<double> x(b.begin(), b.end());
    double max_pivot = 0.0;
    double min_pivot = std::numeric_limits<double>::infinity();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        double pivot_mag = std::abs(a[col * n + col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(a[r * n + col]);
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = r;
            }
        }
        max_pivot = std::max(max_pivot, pivot_mag);
        min_pivot = std::min(min_pivot, pivot_mag);
        if (pivot_mag <= max_pivot * n * std::numeric_limits<double>::epsilon()) {
            const double cond_estimate =
                min_pivot > 0.0 ? max_pivot / min_pivot
                                : std::numeric_limits<double>::infinity();
            throw std::runtime_error(
                "lu_solve: numerically singular system (condition estimate " +
                std::to_string(cond_estimate) + ")");
        }
        if (pivot_row != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a[col * n + c], a[pivot_row * n + c]);
            }
            std::swap(x[col], x[pivot_row]);
        }
        const double pivot = a[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r * n + col] / pivot;
            if (factor == 0.0) {
                continue;
            }
            a[r * n + col] = 0.0;
            for (std::size_t c = col + 1; c < n; ++c) {
                a[r * n + c] -= factor * a[col * n + c];
            }
            x[r] -= factor * x[col];
        }
    }
    for (std::size_t r = n; r-- > 0;) {
        double sum = x[r];
        for (std::size_t c = r + 1; c < n; ++c) {
            sum -= a[r * n + c] * x[c];
        }
        x[r] = sum / a[r * n + r];
    }
    return x;
}

} // namespace qbezier
