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

#include "qbezier/qcalc.hpp"

#include "support/oracles.hpp"

#include <cmath>
#include <stdexcept>

using qbezier::QParam;

namespace {
const double kSweep[] = {0.1, 0.5, 0.9, 1.0};
}

TEST_CASE("QParam accepts (0, 1] and rejects everything else") {
    CHECK(QParam{1.0}.value() == 1.0);
    CHECK(QParam{0.25}.value() == 0.25);
    CHECK(QParam::classical().value() == 1.0);
    CHECK_THROWS_AS(QParam{0.0}, std::domain_error);
    CHECK_THROWS_AS(QParam{-0.5}, std::domain_error);
    CHECK_THROWS_AS(QParam{1.0000001}, std::domain_error);
    CHECK_THROWS_AS(QParam{std::nan("")}, std::domain_error);
}

TEST_CASE("q-integer values") {
    CHECK(qbezier::q_integer(5, QParam{1.0}) == 5.0);
    CHECK(qbezier::q_integer(0, QParam{0.5}) == 0.0);
    CHECK(qbezier::q_integer(3, QParam{0.5}) == 1.75);
}

TEST_CASE("q-integer agrees with the closed quotient away from q = 1") {
    for (double q : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
        for (int r = 0; r <= 30; ++r) {
            const double direct = qbezier::q_integer(r, QParam{q});
            const double quotient = (1.0 - std::pow(q, r)) / (1.0 - q);
            CHECK(std::abs(direct - quotient) <= 1e-12 * std::max(1.0, quotient));
        }
    }
}

TEST_CASE("q-factorial values") {
    CHECK(qbezier::q_factorial(4, QParam{1.0}) == 24.0);
    CHECK(qbezier::q_factorial(0, QParam{0.3}) == 1.0);
    CHECK(qbezier::q_factorial(3, QParam{0.5}) == 2.625);
}

TEST_CASE("q-factorial raises past the degree cap instead of overflowing") {
    CHECK_NOTHROW(qbezier::q_factorial(qbezier::kMaxDegree, QParam{1.0}));
    CHECK_THROWS_AS(qbezier::q_factorial(qbezier::kMaxDegree + 1, QParam{1.0}),
                    std::range_error);
    CHECK_THROWS_AS(qbezier::q_binomial(qbezier::kMaxDegree + 5, 2, QParam{0.5}),
                    std::range_error);
}

TEST_CASE("q-binomial values and out-of-range convention") {
    CHECK(qbezier::q_binomial(4, 2, QParam{1.0}) == 6.0);
    CHECK(qbezier::q_binomial(2, 3, QParam{0.5}) == 0.0);
    CHECK(qbezier::q_binomial(3, 1, QParam{0.5}) == 1.75);
    CHECK(qbezier::q_binomial(-1, 0, QParam{0.5}) == 0.0);
    CHECK(qbezier::q_binomial(3, -2, QParam{0.5}) == 0.0);
    CHECK(qbezier::q_binomial(-4, -4, QParam{0.5}) == 0.0);
}

TEST_CASE("q-binomial additive recurrences") {
    for (double q : kSweep) {
        const QParam qp{q};
        for (int i = 1; i <= 20; ++i) {
            double qj = 1.0;
            for (int j = 0; j <= i; ++j) {
                const double lhs = qbezier::q_binomial(i, j, qp);
                const double rec1 = qbezier::q_binomial(i - 1, j - 1, qp) +
                                    qj * qbezier::q_binomial(i - 1, j, qp);
                const double rec2 = std::pow(q, i - j) * qbezier::q_binomial(i - 1, j - 1, qp) +
                                    qbezier::q_binomial(i - 1, j, qp);
                CHECK(std::abs(lhs - rec1) <= 1e-13 * std::max(1.0, std::abs(lhs)));
                CHECK(std::abs(lhs - rec2) <= 1e-13 * std::max(1.0, std::abs(lhs)));
                qj *= q;
            }
        }
    }
}

TEST_CASE("q-binomial symmetry and positivity") {
    for (double q : kSweep) {
        const QParam qp{q};
        for (int i = 0; i <= 20; ++i) {
            for (int j = 0; j <= i; ++j) {
                const double a = qbezier::q_binomial(i, j, qp);
                const double b = qbezier::q_binomial(i, i - j, qp);
                CHECK(a > 0.0);
                CHECK(std::abs(a - b) <= 1e-13 * a);
            }
        }
    }
}

TEST_CASE("q = 1 reduces to the classical binomial exactly") {
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double expected = qbezier::binomial(i, j);
            CHECK(qbezier::q_binomial(i, j, QParam{1.0}) == expected);
            CHECK(expected == std::floor(expected)); // integer-valued
        }
    }
}

TEST_CASE("floating path matches the exact rational path") {
    struct Case {
        oracles::Rat q;
        int max_degree;
    };
    // Denominator-10 rationals stop at degree 10, where the exact values
    // still fit in 128-bit arithmetic.
    const Case cases[] = {{{1, 2}, 12}, {{1, 1}, 12}, {{3, 10}, 10}, {{9, 10}, 10}};
    for (const auto& c : cases) {
        const QParam qp{c.q.to_double()};
        for (int i = 0; i <= c.max_degree; ++i) {
            for (int j = 0; j <= i; ++j) {
                const double exact = oracles::q_binomial_exact(i, j, c.q).to_double();
                const double got = qbezier::q_binomial(i, j, qp);
                CHECK(std::abs(got - exact) <= 1e-13 * std::max(1.0, exact));
            }
        }
    }
}

TEST_CASE("the two exact routes agree with each other") {
    const oracles::Rat half{1, 2};
    for (int i = 0; i <= 12; ++i) {
        for (int j = 0; j <= i; ++j) {
            CHECK(oracles::q_binomial_exact(i, j, half) ==
                  oracles::q_binomial_exact_factorial(i, j, half));
        }
    }
}

TEST_CASE("classical binomial helper") {
    CHECK(qbezier::binomial(0, 0) == 1.0);
    CHECK(qbezier::binomial(6, 2) == 15.0);
    CHECK(qbezier::binomial(20, 10) == 184756.0);
    CHECK(qbezier::binomial(5, -1) == 0.0);
    CHECK(qbezier::binomial(5, 6) == 0.0);
}
