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

#ifndef ZENOPHOTON_SWEEP_HPP
#define ZENOPHOTON_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "zenophoton/herald.hpp"

namespace zeno {

struct GridSpec {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
    bool log = false;

    std::vector<double> points() const;
    void validate() const;
};

/// One sweep configuration: the fixed parameter map plus an optional grid
/// override.  Defaults mirror the named experiments.
struct SweepConfig {
    double mu = 3.5;
    double loss_ratio = 1e-3;
    double gamma2_filter = 15.0;
    double gamma2_gate = 100.0;
    double eta = 0.75;
    double dark = 1e-5;
    std::optional<GridSpec> grid;  // absent -> experiment default
    int workers = 0;               // 0 -> available parallelism
};

// Named experiments.  Each returns the complete CSV (header + rows, LF line
// endings, %.12e floats) so callers can diff outputs byte for byte.

/// Filter statistics vs mean photon number (columns mu,p0,p1,p_multi).
std::string run_fig2a(const SweepConfig& cfg);

/// Filter statistics vs relative single-photon loss (columns loss_ratio,p0,p1).
std::string run_fig2b(const SweepConfig& cfg);

/// Production and error rate vs gate TPA strength, four loss curves, ideal
/// and realistic detectors (columns gamma2,loss_ratio,detector,ps,pe,h).
std::string run_fig4(const SweepConfig& cfg);

/// Source fidelity vs gate TPA strength, realistic detectors
/// (columns gamma2,loss_ratio,f).
std::string run_fig5(const SweepConfig& cfg);

/// Single operating point (columns ps,pe,h,f,p_multi_input).
std::string run_point_csv(const SweepConfig& cfg);
SourceMetrics run_point(const SweepConfig& cfg);

/// The log-spaced gate grid shared by fig4/fig5, with the exact zero point
/// prepended.
std::vector<double> default_gate_grid();

void write_file(const std::string& path, const std::string& contents);

std::string format_csv_value(double v);

}  // namespace zeno

#endif
