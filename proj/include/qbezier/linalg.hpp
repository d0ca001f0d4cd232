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

#ifndef QBEZIER_LINALG_HPP
#define QBEZIER_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace qbezier {

/// Solves the dense n-by-n system A x = b by LU factorization with
/// partial pivoting. `a` is row-major and consumed in place. Throws
/// std::runtime_error on a numerically singular system; the message
/// carries the pivot-growth condition estimate.
std::vector<double> lu_solve(std::size_t n, std::vector<double> a,
                             std::span<const double> b);

} // namespace qbezier

#endif
