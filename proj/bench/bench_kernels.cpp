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

// Timings of the OpenMP kernels against their serial references. The
// outputs are compared as well, so a speedup never comes at the price
// of a different result.

#include "qbezier/basis.hpp"
#include "qbezier/patch.hpp"
#include "qbezier/stability.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;
using qbezier::DomainPoint;
using qbezier::QParam;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool equal) {
    std::printf("%-24s %9.3f ms %9.3f ms %6.2fx %s\n", name, serial * 1e3,
                parallel * 1e3, serial / parallel, equal ? "identical" : "DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-24s %12s %12s %7s\n", "kernel", "serial", "parallel", "speedup");

    const QParam q{0.5};
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    {
        const int n = 8;
        const int m = 700;
        auto start = clock_type::now();
        const auto serial = qbezier::sample_basis_grid_serial(n, {3, 2, 3}, q, m);
        const double serial_time = seconds_since(start);
        start = clock_type::now();
        const auto parallel = qbezier::sample_basis_grid(n, {3, 2, 3}, q, m);
        const double parallel_time = seconds_since(start);
        report("basis grid sampling", serial_time, parallel_time, serial == parallel);
    }

    {
        qbezier::ControlNet3D net(6);
        for (auto& p : net.values()) {
            p = {dist(rng), dist(rng), dist(rng)};
        }
        const int m = 600;
        auto start = clock_type::now();
        const auto serial = qbezier::tessellate_serial(net, q, m);
        const double serial_time = seconds_since(start);
        start = clock_type::now();
        const auto parallel = qbezier::tessellate(net, q, m);
        const double parallel_time = seconds_since(start);
        report("patch tessellation", serial_time, parallel_time,
               serial.vertices == parallel.vertices && serial.faces == parallel.faces);
    }

    {
        qbezier::TriangularNet<double> net(6);
        for (auto& c : net.values()) {
            c = dist(rng);
        }
        const int m = 900;
        auto start = clock_type::now();
        const double serial =
            qbezier::sup_norm_estimate_serial(net, qbezier::BasisKind::QBernstein, q, m);
        const double serial_time = seconds_since(start);
        start = clock_type::now();
        const double parallel =
            qbezier::sup_norm_estimate(net, qbezier::BasisKind::QBernstein, q, m);
        const double parallel_time = seconds_since(start);
        report("sup-norm grid max", serial_time, parallel_time, serial == parallel);
    }

    {
        qbezier::TriangularNet<double> net(5);
        for (auto& c : net.values()) {
            c = dist(rng);
        }
        std::vector<DomainPoint> points;
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int s = 0; s < 4000; ++s) {
            double u = unit(rng);
            double v = unit(rng);
            if (u + v > 1.0) {
                u = 1.0 - u;
                v = 1.0 - v;
            }
            points.push_back({u, v});
        }
        auto start = clock_type::now();
        const auto serial = qbezier::compare_conditioning_serial(net, q, points, 64);
        const double serial_time = seconds_since(start);
        start = clock_type::now();
        const auto parallel = qbezier::compare_conditioning(net, q, points, 64);
        const double parallel_time = seconds_since(start);
        bool equal = serial.max_ratio == parallel.max_ratio &&
                     serial.entries.size() == parallel.entries.size();
        for (std::size_t s = 0; equal && s < serial.entries.size(); ++s) {
            equal = serial.entries[s].cond_q == parallel.entries[s].cond_q &&
                    serial.entries[s].cond_bernstein == parallel.entries[s].cond_bernstein;
        }
        report("conditioning report", serial_time, parallel_time, equal);
    }

    return 0;
}
