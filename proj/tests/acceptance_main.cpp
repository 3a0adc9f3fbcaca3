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

// End-to-end acceptance gate.  Each numbered criterion prints exactly one
// PASS/FAIL line; the exit status is the number of failures.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "zenophoton/sweep.hpp"
#include "zenophoton/verify.hpp"

using namespace zeno;

namespace {

int failures = 0;

void report(int number, const char* title, bool pass, const std::string& detail) {
    std::printf("criterion %2d %-28s %s  (%s)\n", number, title, pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* format, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), format, a, b);
    return buf;
}

// Worst-case bookkeeping for criterion 11, fed by every density matrix and
// filter distribution the other criteria produce.
struct ConservationAudit {
    double worst_total = 0.0;  // |trace + absorbed - 1|
    double worst_herm = 0.0;
    double worst_neg = 0.0;  // most negative eigenvalue

    void feed(const DensityMatrix& rho) {
        worst_total = std::max(worst_total, std::abs(rho.trace() + rho.absorbed - 1.0));
        worst_herm = std::max(worst_herm, hermiticity_defect(rho.elements));
        worst_neg = std::min(worst_neg, min_eigenvalue(rho.elements));
    }
    void feed(const FilterOutput& out) {
        worst_total = std::max(
            worst_total, std::abs(out.p0 + out.p1 + out.p_multi + out.absorbed - 1.0));
    }
};

ConservationAudit audit;

void criterion_1() {
    const FilterParams p{3.5, 1e-3, 15.0};
    const double r = filter_multi_residual(p);
    audit.feed(filter_evolve(p));
    report(1, "multi-photon suppression", r < 1e-6, fmt("residual = %.3e < 1e-6", r));
}

void criterion_2() {
    double worst = 0.0;
    for (double mu : {0.5, 1.0, 2.0, 3.5, 5.0}) {
        const FilterOutput out = filter_evolve({mu, 0.0, 15.0});
        audit.feed(out);
        worst = std::max(worst, std::abs(out.p1 - (1.0 - std::exp(-2.0 * mu)) / 2.0));
    }
    report(2, "lossless parity oracle", worst <= 1e-6, fmt("max |P1 - parity| = %.3e", worst));
}

void criterion_3() {
    const FilterOutput out = filter_evolve({3.5, 1e-3, 15.0});
    audit.feed(out);
    const bool pass = std::abs(out.p0 - 0.5) <= 0.01 && std::abs(out.p1 - 0.5) <= 0.01;
    report(3, "filter balance at mu=3.5", pass, fmt("P0 = %.4f, P1 = %.4f", out.p0, out.p1));
}

SourceMetrics audited_point(const FilterParams& fp, const GateParams& gp,
                            const DetectorParams& det) {
    for (const auto [nc, nt] :
         {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}}) {
        audit.feed(run_circuit(nc, nt, gp).rho);
    }
    audit.feed(filter_evolve(fp));
    return source_point(fp, fp, gp, det);
}

void criterion_4() {
    GateParams gp;
    gp.gamma2 = 0.0;
    const SourceMetrics m = audited_point({3.5, 0.0, 15.0}, gp, DetectorParams::ideal());
    const bool pass = m.p_s <= 1e-12 && std::abs(m.p_e - m.p_multi_input) <= 1e-12;
    report(4, "identity limit", pass,
           fmt("P_s = %.3e, |P_e - multi| = %.3e", m.p_s, std::abs(m.p_e - m.p_multi_input)));
}

void criterion_5() {
    double prev = 0.0, last = 0.0;
    bool monotone = true;
    for (double g2 : {1.0, 3.0, 10.0, 30.0, 100.0, 300.0, 1000.0}) {
        GateParams gp;
        gp.gamma2 = g2;
        last = phase_flip_fidelity(gp);
        audit.feed(swap_prime(basis_state(StateSpace::canonical(), 0, 1, 1), gp));
        if (last <= prev) monotone = false;
        prev = last;
    }
    report(5, "Zeno phase flip", monotone && last >= 0.995,
           fmt("monotone = %.0f, S(1000) = %.6f", monotone ? 1.0 : 0.0, last));
}

void criterion_6() {
    GateParams gp;
    gp.gamma2 = 1000.0;
    const SourceMetrics m = audited_point({3.5, 0.0, 15.0}, gp, DetectorParams::ideal());
    const bool pass = std::abs(m.p_s - 0.24954) <= 1e-3 && m.h >= 0.999;
    report(6, "ideal production limit", pass, fmt("P_s = %.5f, H = %.6f", m.p_s, m.h));
}

void criterion_7() {
    double best = 0.0;
    for (double g2 : default_gate_grid()) {
        GateParams gp;
        gp.gamma2 = g2;
        gp.loss_ratio = 1e-3;
        const SourceMetrics m =
            source_point({3.5, 1e-3, 15.0}, {3.5, 1e-3, 15.0}, gp, DetectorParams::realistic());
        best = std::max(best, m.f);
    }
    report(7, "headline fidelity", best >= 0.98, fmt("max F over grid = %.5f", best));
}

void criterion_8() {
    GateParams gp;
    gp.gamma2 = 0.0;
    const SourceMetrics m = audited_point({3.5, 0.0, 15.0}, gp, DetectorParams::realistic());
    report(8, "dark-count floor", m.p_e > 0.0 && m.p_e <= 3e-5, fmt("P_e = %.3e", m.p_e));
}

void criterion_from_verify(int number, const char* title, const VerifyReport& rep,
                           const std::vector<std::string>& names) {
    bool pass = true;
    double worst = 0.0;
    for (const auto& c : rep.checks) {
        for (const auto& n : names) {
            if (c.name == n) {
                pass = pass && c.pass;
                worst = std::max(worst, c.measured);
            }
        }
    }
    report(number, title, pass, fmt("worst deviation = %.3e", worst));
}

void criterion_11() {
    const bool pass = audit.worst_total <= 1e-10 && audit.worst_herm <= 1e-10 &&
                      audit.worst_neg >= -1e-10;
    report(11, "conservation suite", pass,
           fmt("|trace defect| = %.3e, min eig = %.3e", audit.worst_total, audit.worst_neg));
}

void criterion_12() {
    SweepConfig cfg;
    cfg.workers = 1;
    const std::string a = run_fig4(cfg);
    cfg.workers = 8;
    const std::string b = run_fig4(cfg);
    report(12, "worker determinism", a == b,
           fmt("bytes = %.0f, equal = %.0f", static_cast<double>(a.size()),
               a == b ? 1.0 : 0.0));
}

}  // namespace

int main() {
    const VerifyReport rep = run_verify();

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_from_verify(9, "integrator cross-check", rep,
                          {"expm_rk4_oracle", "filter_master_oracle"});
    criterion_from_verify(10, "printed-matrix fidelity", rep,
                          {"u1_matrix_match", "u2_matrix_match", "u_involution",
                           "h1_matrix_match", "h2_matrix_match"});
    criterion_11();
    criterion_12();

    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures;
}
