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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zenophoton/sweep.hpp"
#include "zenophoton/verify.hpp"

namespace {

struct Cli {
    zeno::SweepConfig cfg;
    std::string out_path;
    std::string grid_text;
    std::string config_path;
};

zeno::GridSpec parse_grid(const std::string& text) {
    zeno::GridSpec g;
    char kind[8] = {0};
    if (std::sscanf(text.c_str(), "%lf:%lf:%d:%7s", &g.start, &g.stop, &g.count, kind) != 4)
        throw CLI::ValidationError("--grid", "expected <start>:<stop>:<count>:<lin|log>");
    const std::string k(kind);
    if (k == "log")
        g.log = true;
    else if (k == "lin")
        g.log = false;
    else
        throw CLI::ValidationError("--grid", "grid kind must be lin or log");
    g.validate();
    return g;
}

void add_common(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--out", cli.out_path, "Output CSV path (default: stdout)");
    cmd->add_option("--workers", cli.cfg.workers,
                    "Worker pool size (0 = available parallelism)")
        ->capture_default_str();
    cmd->add_option("--mu", cli.cfg.mu, "Mean photon number per input pulse")
        ->capture_default_str();
    cmd->add_option("--loss-ratio", cli.cfg.loss_ratio, "Single-photon loss ratio R1/R2")
        ->capture_default_str();
    cmd->add_option("--gamma2-filter", cli.cfg.gamma2_filter, "Filter-cell TPA strength")
        ->capture_default_str();
    cmd->add_option("--gamma2-gate", cli.cfg.gamma2_gate, "Zeno-gate TPA strength")
        ->capture_default_str();
    cmd->add_option("--eta", cli.cfg.eta, "Detector quantum efficiency")
        ->capture_default_str();
    cmd->add_option("--dark", cli.cfg.dark, "Detector dark-count probability per pulse")
        ->capture_default_str();
    cmd->add_option("--grid", cli.grid_text, "Grid override <start>:<stop>:<count>:<lin|log>");
    cmd->add_option("--config", cli.config_path,
                    "Plain key=value config file (explicit flags override it)");
}

// key=value config loader; a flag given on the command line wins over the
// file, which CLI::count distinguishes after parsing.
void apply_config(const CLI::App* cmd, Cli& cli) {
    std::ifstream in(cli.config_path);
    if (!in) throw zeno::io_error("cannot read config file " + cli.config_path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config",
                                       "line " + std::to_string(lineno) + ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const bool known = key == "mu" || key == "loss-ratio" || key == "gamma2-filter" ||
                           key == "gamma2-gate" || key == "eta" || key == "dark" ||
                           key == "workers" || key == "grid" || key == "out";
        if (!known) throw CLI::ValidationError("--config", "unknown key " + key);
        if (cmd->count("--" + key) > 0) continue;

        try {
            if (key == "mu")
                cli.cfg.mu = std::stod(value);
            else if (key == "loss-ratio")
                cli.cfg.loss_ratio = std::stod(value);
            else if (key == "gamma2-filter")
                cli.cfg.gamma2_filter = std::stod(value);
            else if (key == "gamma2-gate")
                cli.cfg.gamma2_gate = std::stod(value);
            else if (key == "eta")
                cli.cfg.eta = std::stod(value);
            else if (key == "dark")
                cli.cfg.dark = std::stod(value);
            else if (key == "workers")
                cli.cfg.workers = std::stoi(value);
            else if (key == "grid")
                cli.grid_text = value;
            else if (key == "out")
                cli.out_path = value;
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError("--config", "bad value for " + key + ": " + value);
        }
    }
}

int emit(const Cli& cli, const std::string& csv) {
    if (cli.out_path.empty()) {
        std::cout << csv;
    } else {
        zeno::write_file(cli.out_path, csv);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heralded single-photon source simulator: TPA filter cells, a "
                 "Zeno-effect heralding circuit, and threshold detectors."};
    app.require_subcommand(1);

    Cli cli;
    auto* fig2a = app.add_subcommand(
        "fig2a", "Filter statistics vs mean photon number (CSV: mu,p0,p1,p_multi)");
    auto* fig2b = app.add_subcommand(
        "fig2b", "Filter statistics vs single-photon loss (CSV: loss_ratio,p0,p1)");
    auto* fig4 = app.add_subcommand(
        "fig4", "Production and error rates vs gate TPA strength "
                "(CSV: gamma2,loss_ratio,detector,ps,pe,h)");
    auto* fig5 = app.add_subcommand(
        "fig5", "Source fidelity vs gate TPA strength (CSV: gamma2,loss_ratio,f)");
    auto* point = app.add_subcommand("point", "Evaluate a single operating point");
    auto* verify = app.add_subcommand("verify", "Run every invariant suite and report margins");
    for (auto* cmd : {fig2a, fig2b, fig4, fig5, point}) add_common(cmd, cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!cli.config_path.empty()) {
            for (const auto* cmd : {fig2a, fig2b, fig4, fig5, point})
                if (cmd->parsed()) apply_config(cmd, cli);
        }
        if (!cli.grid_text.empty()) cli.cfg.grid = parse_grid(cli.grid_text);

        if (fig2a->parsed()) return emit(cli, zeno::run_fig2a(cli.cfg));
        if (fig2b->parsed()) return emit(cli, zeno::run_fig2b(cli.cfg));
        if (fig4->parsed()) return emit(cli, zeno::run_fig4(cli.cfg));
        if (fig5->parsed()) return emit(cli, zeno::run_fig5(cli.cfg));
        if (point->parsed()) {
            const zeno::SourceMetrics m = zeno::run_point(cli.cfg);
            std::fprintf(stderr,
                         "P_s = %.6e\nP_e = %.6e\nH   = %.6e\nF   = %.6e\n"
                         "p_multi_input = %.6e\n",
                         m.p_s, m.p_e, m.h, m.f, m.p_multi_input);
            return emit(cli, zeno::run_point_csv(cli.cfg));
        }
        if (verify->parsed()) {
            const zeno::VerifyReport report = zeno::run_verify();
            std::cout << report.to_text();
            return report.all_pass() ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const zeno::io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const zeno::invalid_parameter& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
