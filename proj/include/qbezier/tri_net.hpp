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

#ifndef QBEZIER_TRI_NET_HPP
#define QBEZIER_TRI_NET_HPP

#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbezier {

/// Index triple (i, j, k) with i + j + k equal to the degree of the
/// containing net.
struct MultiIndex3 {
    int i = 0;
    int j = 0;
    int k = 0;

    int degree() const noexcept { return i + j + k; }

    bool valid_for(int n) const noexcept {
        return i >= 0 && j >= 0 && k >= 0 && i + j + k == n;
    }

    friend bool operator==(const MultiIndex3&, const MultiIndex3&) = default;
};

/// Number of triples (i, j, k) with i + j + k = n.
constexpr std::size_t tri_entry_count(int n) noexcept {
    return static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
}

/// Flat position of (i, j, k) in the canonical ordering: i descending,
/// then j descending. Row t = n - i starts at t(t+1)/2 and k indexes
/// within the row.
constexpr std::size_t tri_offset(int n, int i, int k) noexcept {
    const std::size_t t = static_cast<std::size_t>(n - i);
    return t * (t + 1) / 2 + static_cast<std::size_t>(k);
}

/// Value types the corner-cutting algorithms operate on: closed under
/// addition and real scaling, with a zero-valued default state.
template <typename V>
concept LinearValue = std::default_initializable<V> && requires(V a, V b, double s) {
    { a + b } -> std::convertible_to<V>;
    { s * a } -> std::convertible_to<V>;
};

/// Triangular array with one entry per index triple of a fixed degree,
/// stored contiguously in the canonical (i desc, j desc) order.
template <LinearValue V>
class TriangularNet {
public:
    TriangularNet() = default;

    explicit TriangularNet(int degree, const V& fill = V{})
        : degree_(degree), values_(checked_count(degree), fill) {}

    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return values_.size(); }

    V& at(int i, int j, int k) {
        check_index(i, j, k);
        return values_[tri_offset(degree_, i, k)];
    }
    const V& at(int i, int j, int k) const {
        check_index(i, j, k);
        return values_[tri_offset(degree_, i, k)];
    }
    V& at(const MultiIndex3& m) { return at(m.i, m.j, m.k); }
    const V& at(const MultiIndex3& m) const { return at(m.i, m.j, m.k); }

    V& operator[](std::size_t flat) { return values_[flat]; }
    const V& operator[](std::size_t flat) const { return values_[flat]; }

    std::span<const V> values() const noexcept { return values_; }
    std::span<V> values() noexcept { return values_; }

    friend bool operator==(const TriangularNet&, const TriangularNet&) = default;

private:
    static std::size_t checked_count(int degree) {
        if (degree < 0) {
            throw std::range_error("TriangularNet: negative degree " +
                                   std::to_string(degree));
        }
        return tri_entry_count(degree);
    }

    void check_index(int i, int j, int k) const {
        if (!MultiIndex3{i, j, k}.valid_for(degree_)) {
            throw std::out_of_range("TriangularNet: index (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ", " +
                                    std::to_string(k) + ") invalid for degree " +
                                    std::to_string(degree_));
        }
    }

    int degree_ = 0;
    std::vector<V> values_ = std::vector<V>(1);
};

/// Scalar coefficient net of a q-Bezier representation.
using CoefficientNet = TriangularNet<double>;

/// Visits every triple of degree n in canonical order.
template <typename F>
void for_each_index(int n, F&& visit) {
    for (int i = n; i >= 0; --i) {
        for (int j = n - i; j >= 0; --j) {
            visit(MultiIndex3{i, j, n - i - j});
        }
    }
}

/// All triples of degree n in canonical order.
inline std::vector<MultiIndex3> tri_indices(int n) {
    std::vector<MultiIndex3> out;
    out.reserve(tri_entry_count(n));
    for_each_index(n, [&](const MultiIndex3& m) { out.push_back(m); });
    return out;
}

} // namespace qbezier

#endif
