// Copyright 2026 The zenophoton authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Times the gate sweep with the serial reference path against the OpenMP
// pool and checks that both produce the same bytes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "zenophoton/sweep.hpp"

namespace {

double time_run(zeno::SweepConfig cfg, int workers, std::string& out) {
    cfg.workers = workers;
    const auto t0 = std::chrono::steady_clock::now();
    out = zeno::run_fig4(cfg);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return dt.count();
}

}  // namespace

int main(int argc, char** argv) {
    zeno::SweepConfig cfg;
    // a third of the default grid keeps one benchmark run under a minute
    cfg.grid = zeno::GridSpec{0.1, 1000.0, 21, true};
    if (argc > 1) cfg.grid->count = std::atoi(argv[1]);

    std::string serial_csv, parallel_csv;
    const double t_serial = time_run(cfg, 1, serial_csv);
    const int pool = std::max(2, omp_get_max_threads());
    const double t_parallel = time_run(cfg, pool, parallel_csv);

    std::printf("grid points : %d (x4 loss curves)\n", cfg.grid->count);
    std::printf("serial      : %8.3f s\n", t_serial);
    std::printf("%2d workers  : %8.3f s\n", pool, t_parallel);
    std::printf("speedup     : %8.2fx\n", t_serial / t_parallel);

    if (serial_csv != parallel_csv) {
        std::printf("outputs differ between the serial and parallel paths\n");
        return 1;
    }
    std::printf("outputs identical\n");
    return 0;
}
