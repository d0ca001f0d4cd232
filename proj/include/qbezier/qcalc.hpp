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

#ifndef QBEZIER_QCALC_HPP
#define QBEZIER_QCALC_HPP

namespace qbezier {

/// Shape parameter of the q-Bernstein family. Valid range is (0, 1];
/// q = 1 recovers the classical Bernstein setting.
class QParam {
public:
    explicit QParam(double q);

    double value() const noexcept { return q_; }

    /// The classical parameter q = 1.
    static QParam classical() noexcept;

private:
    double q_;
};

/// Highest degree supported by the floating-point factorial path.
inline constexpr int kMaxDegree = 60;

/// q-integer [r] = 1 + q + ... + q^(r-1). Computed by direct summation,
/// so [r] = r holds exactly at q = 1 and r = 0 gives the empty sum 0.
double q_integer(int r, QParam q);

/// q-factorial [r]! = [r][r-1]...[1], with [0]! = 1.
/// Throws std::range_error for r > kMaxDegree.
double q_factorial(int r, QParam q);

/// q-binomial coefficient [i]! / ([j]! [i-j]!) for i >= j >= 0,
/// and 0 for every other integer pair.
double q_binomial(int i, int j, QParam q);

/// Classical binomial coefficient as a double, 0 outside 0 <= k <= n.
/// Built additively, so values stay exact while representable.
double binomial(int n, int k);

} // namespace qbezier

#endif
