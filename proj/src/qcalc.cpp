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

#include "qbezier/qcalc.hpp"

#include <stdexcept>
#include <string>

namespace qbezier {

QParam::QParam(double q) : q_(q) {
    if (!(q > 0.0) || q > 1.0) {
        throw std::domain_error("QParam: q must lie in (0, 1], got " +
                                std::to_string(q));
    }
}

QParam QParam::classical() noexcept {
    QParam p{1.0};
    return p;
}

double q_integer(int r, QParam q) {
    double sum = 0.0;
    double power = 1.0;
    for (int s = 0; s < r; ++s) {
        sum += power;
        power *= q.value();
    }
    return sum;
}

double q_factorial(int r, QParam q) {
    if (r > kMaxDegree) {
        throw std::range_error("q_factorial: r = " + std::to_string(r) +
                               " exceeds the supported maximum " +
                               std::to_string(kMaxDegree));
    }
    double product = 1.0;
    for (int s = 1; s <= r; ++s) {
        product *= q_integer(s, q);
    }
    return product;
}

double q_binomial(int i, int j, QParam q) {
    if (j < 0 || i < j) {
        return 0.0;
    }
    return q_factorial(i, q) / (q_factorial(j, q) * q_factorial(i - j, q));
}

double binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0.0;
    }
    if (n > kMaxDegree) {
        throw std::range_error("binomial: n = " + std::to_string(n) +
                               " exceeds the supported maximum " +
                               std::to_string(kMaxDegree));
    }
    if (k > n - k) {
        k = n - k;
    }
    // One Pascal row updated in place; integer additions stay exact in
    // double while the values themselves remain representable.
    double row[kMaxDegree + 1] = {1.0};
    for (int m = 1; m <= n; ++m) {
        for (int c = (m < k ? m : k); c > 0; --c) {
            row[c] += row[c - 1];
        }
    }
    return row[k];
}

} // namespace qbezier
