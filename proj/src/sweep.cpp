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

#include "zenophoton/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>

#include <omp.h>

namespace zeno {

namespace {

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    return std::max(1, omp_get_max_threads());
}

// Evaluate f(0..n-1) into a vector, serially for one worker or with the
// OpenMP pool otherwise.  Output order is by index either way.
template <typename F>
auto parallel_map(int n, int workers, F&& f) {
    using R = std::invoke_result_t<F&, int>;
    std::vector<R> out(n);
    workers = resolve_workers(workers);
    if (workers <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < n; ++i) {
        try {
            out[i] = f(i);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

const std::array<double, 4> kLossCurves = {0.0, 1e-2, 1e-3, 1e-4};

}  // namespace

std::string format_csv_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::vector<double> GridSpec::points() const {
    validate();
    std::vector<double> pts(count);
    if (log) {
        const double l0 = std::log10(start), l1 = std::log10(stop);
        for (int i = 0; i < count; ++i)
            pts[i] = std::pow(10.0, l0 + (l1 - l0) * i / (count - 1));
    } else {
        for (int i = 0; i < count; ++i)
            pts[i] = start + (stop - start) * i / (count - 1);
    }
    return pts;
}

void GridSpec::validate() const {
    if (count < 2) throw invalid_parameter("grid: count must be >= 2");
    if (!(start < stop)) throw invalid_parameter("grid: start must be below stop");
    if (log && (start <= 0.0 || stop <= 0.0))
        throw invalid_parameter("grid: log grids require positive bounds");
}

std::vector<double> default_gate_grid() {
    GridSpec g{0.1, 1000.0, 61, true};
    std::vector<double> pts = g.points();
    pts.insert(pts.begin(), 0.0);
    return pts;
}

std::string run_fig2a(const SweepConfig& cfg) {
    const GridSpec grid = cfg.grid.value_or(GridSpec{0.0, 5.0, 101, false});
    const std::vector<double> mus = grid.points();
    auto rows = parallel_map(static_cast<int>(mus.size()), cfg.workers, [&](int i) {
        FilterParams p{mus[i], cfg.loss_ratio, cfg.gamma2_filter};
        const FilterOutput out = filter_evolve(p);
        return format_csv_value(mus[i]) + "," + format_csv_value(out.p0) + "," +
               format_csv_value(out.p1) + "," + format_csv_value(out.p_multi) + "\n";
    });
    std::string csv = "mu,p0,p1,p_multi\n";
    for (const auto& r : rows) csv += r;
    return csv;
}

std::string run_fig2b(const SweepConfig& cfg) {
    const GridSpec grid = cfg.grid.value_or(GridSpec{1e-4, 1.0, 41, true});
    const std::vector<double> losses = grid.points();
    auto rows = parallel_map(static_cast<int>(losses.size()), cfg.workers, [&](int i) {
        FilterParams p{cfg.mu, losses[i], cfg.gamma2_filter};
        const FilterOutput out = filter_evolve(p);
        return format_csv_value(losses[i]) + "," + format_csv_value(out.p0) + "," +
               format_csv_value(out.p1) + "\n";
    });
    std::string csv = "loss_ratio,p0,p1\n";
    for (const auto& r : rows) csv += r;
    return csv;
}

namespace {

// Shared scaffold for fig4/fig5: one cell per (gamma2, loss) pair; the filter
// solutions depend on loss only and are computed once up front.
template <typename RowFn>
std::string gate_sweep(const SweepConfig& cfg, RowFn&& row_fn, const std::string& header,
                       bool realistic_only) {
    const std::vector<double> gammas =
        cfg.grid ? [&] {
            auto pts = cfg.grid->points();
            return pts;
        }()
                 : default_gate_grid();

    std::array<PhotonDistribution, kLossCurves.size()> filtered;
    for (size_t li = 0; li < kLossCurves.size(); ++li) {
        FilterParams p{cfg.mu, kLossCurves[li], cfg.gamma2_filter};
        filtered[li] = filter_evolve(p).dist;
    }

    const int n_cells = static_cast<int>(gammas.size() * kLossCurves.size());
    auto rows = parallel_map(n_cells, cfg.workers, [&](int cell) {
        const int gi = cell / static_cast<int>(kLossCurves.size());
        const int li = cell % static_cast<int>(kLossCurves.size());
        GateParams gp;
        gp.gamma2 = gammas[gi];
        gp.loss_ratio = kLossCurves[li];
        const CircuitChannel channel(gp);
        std::string out;
        const DetectorParams dets[] = {DetectorParams::ideal(), DetectorParams::realistic()};
        const char* names[] = {"ideal", "realistic"};
        for (int d = realistic_only ? 1 : 0; d < 2; ++d) {
            const SourceMetrics m =
                source_metrics_from_parts(filtered[li], filtered[li], channel, dets[d]);
            out += row_fn(gammas[gi], kLossCurves[li], names[d], m);
        }
        return out;
    });
    std::string csv = header;
    for (const auto& r : rows) csv += r;
    return csv;
}

}  // namespace

std::string run_fig4(const SweepConfig& cfg) {
    return gate_sweep(
        cfg,
        [](double g2, double loss, const char* det, const SourceMetrics& m) {
            return format_csv_value(g2) + "," + format_csv_value(loss) + "," + det + "," +
                   format_csv_value(m.p_s) + "," + format_csv_value(m.p_e) + "," +
                   format_csv_value(m.h) + "\n";
        },
        "gamma2,loss_ratio,detector,ps,pe,h\n", false);
}

std::string run_fig5(const SweepConfig& cfg) {
    return gate_sweep(
        cfg,
        [](double g2, double loss, const char*, const SourceMetrics& m) {
            return format_csv_value(g2) + "," + format_csv_value(loss) + "," +
                   format_csv_value(m.f) + "\n";
        },
        "gamma2,loss_ratio,f\n", true);
}

SourceMetrics run_point(const SweepConfig& cfg) {
    FilterParams fp{cfg.mu, cfg.loss_ratio, cfg.gamma2_filter};
    GateParams gp;
    gp.gamma2 = cfg.gamma2_gate;
    gp.loss_ratio = cfg.loss_ratio;
    DetectorParams det{cfg.eta, cfg.dark};
    return source_point(fp, fp, gp, det);
}

std::string run_point_csv(const SweepConfig& cfg) {
    const SourceMetrics m = run_point(cfg);
    std::string csv = "ps,pe,h,f,p_multi_input\n";
    csv += format_csv_value(m.p_s) + "," + format_csv_value(m.p_e) + "," +
           format_csv_value(m.h) + "," + format_csv_value(m.f) + "," +
           format_csv_value(m.p_multi_input) + "\n";
    return csv;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << contents;
    if (!out) throw io_error("failed writing " + path);
}

}  // namespace zeno
