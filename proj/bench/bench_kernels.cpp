/*
   Copyright 2026 The zprconv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Compares the serial reference implementations of the enumeration kernels
// against the OpenMP variants. Each instance is repeated until the serial
// side accumulates measurable time; the reported figures are per-call
// averages. The weight searches are branch-and-bound and finish quickly once
// a light incumbent exists, so threading pays off only on the heavier
// searches; the table makes that visible rather than hiding it.

#include <chrono>
#include <cstdio>
#include <functional>

#include "zpr/convcode.hpp"
#include "zpr/distances.hpp"
#include "zpr/poly.hpp"
#include "zpr/primeness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_ms(int reps, const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() /
           static_cast<double>(reps);
}

void row(const char* name, int reps, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-26s %6d reps %10.2f ms %10.2f ms   x%.2f   %s\n", name, reps, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                agree ? "agree" : "MISMATCH");
}

zpr::ConvCode make_code(const zpr::RingSpec& ring, int k, int n,
                        const std::vector<std::string>& entries) {
    zpr::PolyMatrix g(ring, k, n);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j) {
            g.set(i, j, zpr::parse_poly(entries[static_cast<std::size_t>(i * n + j)], ring));
        }
    }
    return zpr::ConvCode(std::move(g));
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the serial path\n");
#endif
    std::printf("%-26s %11s %13s %13s %9s\n", "kernel", "", "serial", "parallel", "speedup");

    {
        zpr::RingSpec z9(3, 2);
        zpr::ConvCode code =
            make_code(z9, 2, 3, {"1", "d", "1+d+3*d^2", "0", "1", "2+d+5*d^2"});
        int serial_value = 0, parallel_value = 0;
        const int reps = 100;
        double s = time_ms(reps, [&] { serial_value = zpr::column_distance_serial(code, 3); });
        double p = time_ms(reps, [&] { parallel_value = zpr::column_distance(code, 3); });
        row("column distance (gen)", reps, s, p, serial_value == parallel_value);
    }

    {
        zpr::RingSpec z9(3, 2);
        zpr::ConvCode code = make_code(z9, 1, 2, {"1+d+2*d^2", "1+2*d+d^2"});
        int serial_value = 0, parallel_value = 0;
        const int reps = 300;
        double s =
            time_ms(reps, [&] { serial_value = zpr::column_distance_via_parity_serial(code, 3); });
        double p = time_ms(reps, [&] { parallel_value = zpr::column_distance_via_parity(code, 3); });
        row("column distance (parity)", reps, s, p, serial_value == parallel_value);
    }

    {
        zpr::RingSpec z9(3, 2);
        zpr::ConvCode code = make_code(z9, 1, 2, {"1+d+2*d^2", "1+2*d+d^2"});
        int serial_value = 0, parallel_value = 0;
        const int reps = 300;
        double s = time_ms(reps, [&] { serial_value = zpr::free_distance_bounded_serial(code, 7); });
        double p = time_ms(reps, [&] { parallel_value = zpr::free_distance_bounded(code, 7); });
        row("bounded free distance", reps, s, p, serial_value == parallel_value);
    }

    {
        zpr::RingSpec z4(2, 2);
        zpr::PolyMatrix a(z4, 1, 2);
        a.set(0, 0, zpr::parse_poly("1+3*d", z4));
        a.set(0, 1, zpr::parse_poly("1+d", z4));
        zpr::LfpVerdict sv{zpr::LfpOutcome::implied_by_lzp, 0, std::nullopt, std::nullopt};
        zpr::LfpVerdict pv = sv;
        const int reps = 1;
        double s = time_ms(reps, [&] { sv = zpr::lfp_enumerate(a, 8, false); });
        double p = time_ms(reps, [&] { pv = zpr::lfp_enumerate(a, 8, true); });
        row("left-factor search", reps, s, p, sv.outcome == pv.outcome);
    }

    return 0;
}
