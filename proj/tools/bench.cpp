// Copyright 2026 the sgraphs authors
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

// Compares the serial enumeration against the OpenMP scan and reports
// timings. The two must agree exactly; a mismatch exits nonzero.

#include <chrono>
#include <cstdio>

#include "CLI11.hpp"
#include "sgr/enumeration.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_t = 6;
    int jobs = 0;
    bool quick = false;
    CLI::App app{"serial versus parallel enumeration timings"};
    app.add_option("--t", max_t, "largest t to time")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for the parallel scan")
        ->capture_default_str();
    app.add_flag("--quick", quick, "single t=4 round for smoke testing");
    CLI11_PARSE(app, argc, argv);

    int lo = quick ? 4 : 2;
    int hi = quick ? 4 : max_t;
    if (hi > sgr::kMaxEnumerationT) hi = sgr::kMaxEnumerationT;

    std::printf("%3s %9s %12s %12s %9s\n", "t", "classes", "serial ms", "parallel ms",
                "speedup");
    for (int t = lo; t <= hi; t++) {
        Clock::time_point start = Clock::now();
        std::vector<sgr::ClassKey> serial = sgr::enumerate_classes_serial(t);
        double serial_ms = ms_since(start);

        start = Clock::now();
        std::vector<sgr::ClassKey> parallel = sgr::enumerate_classes(t, jobs);
        double parallel_ms = ms_since(start);

        if (serial != parallel) {
            std::fprintf(stderr, "mismatch at t=%d: %zu serial vs %zu parallel classes\n", t,
                         serial.size(), parallel.size());
            return 1;
        }
        std::printf("%3d %9zu %12.1f %12.1f %8.2fx\n", t, serial.size(), serial_ms,
                    parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
    }
    return 0;
}
