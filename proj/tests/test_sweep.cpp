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

#include <cmath>
#include <sstream>
#include <string>

#include <doctest.h>

#include "zenophoton/sweep.hpp"
#include "zenophoton/verify.hpp"

using namespace zeno;

namespace {

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("grid spec") {
    GridSpec lin{0.0, 5.0, 6, false};
    const auto lp = lin.points();
    REQUIRE(lp.size() == 6);
    CHECK(lp.front() == 0.0);
    CHECK(lp.back() == 5.0);
    CHECK(lp[1] == doctest::Approx(1.0));

    GridSpec lg{0.1, 1000.0, 5, true};
    const auto gp = lg.points();
    CHECK(gp[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gp[3] == doctest::Approx(100.0).epsilon(1e-12));

    CHECK_THROWS_AS((GridSpec{1.0, 2.0, 1, false}.validate()), invalid_parameter);
    CHECK_THROWS_AS((GridSpec{0.0, 2.0, 5, true}.validate()), invalid_parameter);
    CHECK_THROWS_AS((GridSpec{2.0, 1.0, 5, false}.validate()), invalid_parameter);

    GridSpec single{3.0, 3.0, 1, false};
    CHECK_THROWS_AS(single.validate(), invalid_parameter);
}

TEST_CASE("csv float formatting") {
    CHECK(format_csv_value(0.5) == "5.000000000000e-01");
    CHECK(format_csv_value(0.0) == "0.000000000000e+00");
    CHECK(format_csv_value(1e-12) == "1.000000000000e-12");
}

TEST_CASE("fig2a output shape and landmark row") {
    SweepConfig cfg;
    cfg.workers = 1;
    cfg.grid = GridSpec{3.5, 4.0, 2, false};
    const std::string csv = run_fig2a(cfg);
    CHECK(csv.find("mu,p0,p1,p_multi\n") == 0);
    CHECK(count_lines(csv) == 3);  // header + 2 rows
    CHECK(csv.find('\r') == std::string::npos);

    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    double mu, p0, p1, pm;
    char comma;
    std::istringstream(row) >> mu >> comma >> p0 >> comma >> p1 >> comma >> pm;
    CHECK(mu == doctest::Approx(3.5));
    CHECK(p0 == doctest::Approx(0.5070788333384934).epsilon(1e-9));
    CHECK(p1 == doctest::Approx(0.49292100719296644).epsilon(1e-9));
}

TEST_CASE("fig2b covers the four-decade loss axis") {
    SweepConfig cfg;
    cfg.workers = 1;
    cfg.grid = GridSpec{1e-4, 1.0, 5, true};
    const std::string csv = run_fig2b(cfg);
    CHECK(csv.find("loss_ratio,p0,p1\n") == 0);
    CHECK(count_lines(csv) == 6);
}

TEST_CASE("fig4 enumerates loss curves and detector models") {
    SweepConfig cfg;
    cfg.workers = 1;
    cfg.grid = GridSpec{10.0, 100.0, 2, true};
    const std::string csv = run_fig4(cfg);
    CHECK(csv.find("gamma2,loss_ratio,detector,ps,pe,h\n") == 0);
    // 2 grid points x 4 loss curves x 2 detector models
    CHECK(count_lines(csv) == 17);
    CHECK(csv.find("ideal") != std::string::npos);
    CHECK(csv.find("realistic") != std::string::npos);
}

TEST_CASE("fig5 rows") {
    SweepConfig cfg;
    cfg.workers = 1;
    cfg.grid = GridSpec{10.0, 100.0, 2, true};
    const std::string csv = run_fig5(cfg);
    CHECK(csv.find("gamma2,loss_ratio,f\n") == 0);
    CHECK(count_lines(csv) == 9);  // header + 2 x 4 loss curves
}

TEST_CASE("worker count does not change a single byte") {
    SweepConfig cfg;
    cfg.grid = GridSpec{1.0, 100.0, 3, true};
    cfg.workers = 1;
    const std::string serial = run_fig4(cfg);
    cfg.workers = 4;
    const std::string parallel = run_fig4(cfg);
    CHECK(serial == parallel);
}

TEST_CASE("default gate grid starts at the exact off state") {
    const auto grid = default_gate_grid();
    REQUIRE(grid.size() == 62);
    CHECK(grid[0] == 0.0);
    CHECK(grid[1] == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(grid.back() == doctest::Approx(1000.0).epsilon(1e-12));
}

TEST_CASE("run_point at the defaults") {
    SweepConfig cfg;
    cfg.workers = 1;
    const SourceMetrics m = run_point(cfg);
    CHECK(m.h == doctest::Approx(0.9439657839134311).epsilon(1e-7));
    CHECK(m.f == doctest::Approx(std::sqrt(m.h)).epsilon(1e-12));

    const std::string csv = run_point_csv(cfg);
    CHECK(csv.find("ps,pe,h,f,p_multi_input\n") == 0);
    CHECK(count_lines(csv) == 2);
}

TEST_CASE("write_file rejects unwritable paths") {
    CHECK_THROWS_AS(write_file("/nonexistent-dir/out.csv", "x\n"), io_error);
}

TEST_CASE("verify passes clean and catches a seeded corruption") {
    VerifyOptions opts;
    const VerifyReport clean = run_verify(opts);
    for (const auto& c : clean.checks) {
        INFO(c.name, " measured=", c.measured, " bound=", c.bound);
        CHECK(c.pass);
    }
    CHECK(clean.all_pass());
    CHECK(clean.to_text().find("PASS") != std::string::npos);

    opts.corrupt_u2 = true;
    const VerifyReport bad = run_verify(opts);
    CHECK_FALSE(bad.all_pass());
}
