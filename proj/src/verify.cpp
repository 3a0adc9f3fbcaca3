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

#include "zenophoton/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "zenophoton/herald.hpp"
#include "zenophoton/sweep.hpp"

namespace zeno {

namespace {

constexpr int kDim = StateSpace::kDim;
const double kR = 1.0 / std::numbers::sqrt2;
const double kSqrt2 = std::numbers::sqrt2;

// The printed single- and two-photon beam-splitter blocks and coupling
// blocks, in the basis order |001>,|010>,|100> and
// |011>,|002>,|020>,|101>,|110>,|200>.
const double kU1[3][3] = {{-kR, 0, kR}, {0, 1, 0}, {kR, 0, kR}};
const double kU2[6][6] = {{-kR, 0, 0, 0, kR, 0},
                          {0, kR * kR, 0, -kR, 0, kR * kR},
                          {0, 0, 1, 0, 0, 0},
                          {0, -kR, 0, 0, 0, kR},
                          {kR, 0, 0, 0, kR, 0},
                          {0, kR * kR, 0, kR, 0, kR * kR}};
const double kH1[3][3] = {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
const double kH2[6][6] = {{0, kSqrt2, kSqrt2, 0, 0, 0}, {kSqrt2, 0, 0, 0, 0, 0},
                          {kSqrt2, 0, 0, 0, 0, 0},      {0, 0, 0, 0, 1, 0},
                          {0, 0, 0, 1, 0, 0},           {0, 0, 0, 0, 0, 0}};

DensityMatrix random_density(std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    CMatrix a(kDim, kDim);
    for (int j = 0; j < kDim; ++j)
        for (int i = 0; i < kDim; ++i) a(i, j) = Complex(gauss(rng), gauss(rng));
    CMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    DensityMatrix out;
    out.elements = std::move(rho);
    return out;
}

struct Collector {
    std::vector<VerifyCheck> checks;

    void add(const std::string& name, double measured, double bound) {
        checks.push_back({name, measured, bound, measured <= bound});
    }
};

}  // namespace

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-34s measured=%.3e bound=%.3e %s\n",
                      c.name.c_str(), c.measured, c.bound, c.pass ? "PASS" : "FAIL");
        os << line;
    }
    return os.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
    Collector col;
    const auto& space = StateSpace::canonical();
    std::mt19937 rng(options.seed);

    // --- printed-matrix fidelity -------------------------------------------
    CMatrix u = hadamard_unitary(space);
    if (options.corrupt_u2) u(space.index(0, 1, 1), space.index(1, 1, 0)) += 1e-3;
    double dev = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            dev = std::max(dev, std::abs(u(1 + i, 1 + j) - Complex(kU1[i][j])));
    col.add("u1_matrix_match", dev, 1e-12);
    dev = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            dev = std::max(dev, std::abs(u(4 + i, 4 + j) - Complex(kU2[i][j])));
    col.add("u2_matrix_match", dev, 1e-12);
    col.add("u_block_structure",
            u.row(0).tail(kDim - 1).cwiseAbs().maxCoeff() +
                u.block(1, 4, 3, 6).cwiseAbs().maxCoeff() +
                u.block(4, 1, 6, 3).cwiseAbs().maxCoeff(),
            1e-12);
    col.add("u_involution", (u * u - CMatrix::Identity(kDim, kDim)).cwiseAbs().maxCoeff(),
            1e-12);

    const CMatrix h = coupling_hamiltonian(space);
    dev = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            dev = std::max(dev, std::abs(h(1 + i, 1 + j) - Complex(kH1[i][j])));
    col.add("h1_matrix_match", dev, 1e-12);
    dev = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            dev = std::max(dev, std::abs(h(4 + i, 4 + j) - Complex(kH2[i][j])));
    col.add("h2_matrix_match", dev, 1e-12);

    // --- identity channel at zero rates ------------------------------------
    {
        GateParams gp;
        gp.gamma2 = 0.0;
        gp.loss_ratio = 0.0;
        const CircuitChannel channel(gp);
        double worst = 0.0;
        for (auto [nc, nt] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}}) {
            const CircuitOutput out = channel.run(nc, nt);
            const int idx = space.index(0, nc, nt);
            worst = std::max(worst, 1.0 - out.rho.elements(idx, idx).real());
        }
        col.add("identity_channel_zero_rates", worst, 1e-9);
    }

    // --- Zeno phase-flip monotonicity --------------------------------------
    {
        double prev = -1.0, worst_drop = 0.0, s_last = 0.0;
        for (double g2 : {1.0, 3.0, 10.0, 30.0, 100.0, 300.0, 1000.0}) {
            GateParams gp;
            gp.gamma2 = g2;
            const double s = phase_flip_fidelity(gp);
            worst_drop = std::max(worst_drop, prev - s);
            prev = s;
            s_last = s;
        }
        col.add("zeno_fidelity_monotone", worst_drop, 1e-12);
        col.add("zeno_fidelity_threshold", 0.995 - s_last, 0.0);
    }

    // --- expm vs RK4 oracle -------------------------------------------------
    {
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double worst = 0.0, worst_cons = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            GateParams gp;
            gp.gamma2 = std::pow(10.0, -1.0 + 2.5 * unif(rng));  // 0.1 .. ~30
            gp.loss_ratio = 0.01 * unif(rng);
            gp.feed_vacuum = trial % 2 == 0;
            const Liouvillian lv = gate_liouvillian(gp);
            const DensityMatrix rho0 = random_density(rng);
            const double s = 1.0;
            const DensityMatrix a = evolve_expm(lv, rho0, s);
            const DensityMatrix b = evolve_rk4(lv, rho0, s, suggested_steps(lv, s));
            worst = std::max(worst, (a.elements - b.elements).cwiseAbs().maxCoeff());
            worst = std::max(worst, std::abs(a.absorbed - b.absorbed));
            worst_cons = std::max(worst_cons, std::abs(a.trace() + a.absorbed - 1.0));
            worst_cons = std::max(worst_cons, hermiticity_defect(a.elements));
            worst_cons = std::max(worst_cons, std::max(0.0, -min_eigenvalue(a.elements)));
        }
        col.add("expm_rk4_oracle", worst, 1e-8);
        col.add("evolution_conservation", worst_cons, 1e-10);
    }

    // --- unitary limit ------------------------------------------------------
    {
        GateParams gp;
        gp.gamma2 = 0.0;
        const Liouvillian lv = gate_liouvillian(gp);
        const DensityMatrix rho0 = random_density(rng);
        const double purity0 = (rho0.elements * rho0.elements).trace().real();
        const DensityMatrix rho1 = evolve_expm(lv, rho0, 1.0);
        const double purity1 = (rho1.elements * rho1.elements).trace().real();
        col.add("unitary_purity_preserved", std::abs(purity1 - purity0), 1e-10);
    }

    // --- monotone absorption (sink mode) ------------------------------------
    {
        GateParams gp;
        gp.gamma2 = 5.0;
        gp.feed_vacuum = false;
        const Liouvillian lv = gate_liouvillian(gp);
        const DensityMatrix rho0 = basis_state(space, 0, 1, 1);
        double prev = 0.0, worst = 0.0;
        for (double s = 0.1; s <= 1.0; s += 0.1) {
            const DensityMatrix rho = evolve_expm(lv, rho0, s);
            worst = std::max(worst, prev - rho.absorbed);
            prev = rho.absorbed;
        }
        col.add("absorption_monotone", worst, 1e-12);
    }

    // --- filter invariants --------------------------------------------------
    {
        const int n_max = auto_nmax(3.5);
        PhotonDistribution init = poisson_distribution(3.5, n_max);
        auto parity = [](const PhotonDistribution& d) {
            double even = 0.0, odd = 0.0;
            for (int n = 0; n <= d.n_max(); ++n) (n % 2 ? odd : even) += d.probs[n];
            return std::pair{even, odd};
        };
        const auto [even0, odd0] = parity(init);
        double worst_parity = 0.0, worst_norm = 0.0;
        evolve_number_rates(init, 15.0, 0.0, true, [&](const PhotonDistribution& d) {
            const auto [even, odd] = parity(d);
            worst_parity = std::max({worst_parity, std::abs(even - even0), std::abs(odd - odd0)});
            worst_norm = std::max(worst_norm, std::abs(d.total() - init.total()));
        });
        col.add("filter_parity_conserved", worst_parity, 1e-10);
        col.add("filter_norm_conserved", worst_norm, 1e-10);

        const PhotonDistribution lossed = loss_only_check(2.0, std::log(2.0));
        const PhotonDistribution target = poisson_distribution(1.0, lossed.n_max());
        double worst_loss = 0.0;
        for (int n = 0; n <= lossed.n_max(); ++n)
            worst_loss = std::max(worst_loss, std::abs(lossed.probs[n] - target.probs[n]));
        col.add("filter_loss_oracle", worst_loss, 1e-10);

        // Rate solver against the full one-mode master equation.
        double worst_master = 0.0;
        for (double mu : {0.5, 1.0, 2.0}) {
            const int nm = auto_nmax(mu);
            std::vector<std::vector<int>> occ;
            for (int n = 0; n <= nm; ++n) occ.push_back({n});
            std::vector<DecayChannel> channels;
            const double gamma = 1e-3;
            for (int n = 2; n <= nm; ++n)
                channels.push_back(
                    DecayChannel::state_decay(n, 0.5 * n * (n - 1), std::optional<int>(n - 2)));
            channels.push_back(DecayChannel::mode_loss(0, gamma));
            const Liouvillian lv =
                build_liouvillian(CMatrix::Zero(nm + 1, nm + 1), channels, occ);
            CMatrix rho0 = CMatrix::Zero(nm + 1, nm + 1);
            const PhotonDistribution init_mu = poisson_distribution(mu, nm);
            for (int n = 0; n <= nm; ++n) rho0(n, n) = init_mu.probs[n];
            const CMatrix rho1 = evolve_expm(lv, rho0, 15.0).rho;
            const PhotonDistribution fast = evolve_number_rates(init_mu, 15.0, gamma, true);
            for (int n = 0; n <= nm; ++n)
                worst_master =
                    std::max(worst_master, std::abs(fast.probs[n] - rho1(n, n).real()));
        }
        col.add("filter_master_oracle", worst_master, 1e-9);

        // Loss skews the distribution toward vacuum.
        double prev_p0 = -1.0, worst_skew = 0.0, prev_p1 = 2.0;
        for (double loss : {0.0, 1e-4, 1e-3, 1e-2, 1e-1, 1.0}) {
            const FilterOutput out = filter_evolve({3.5, loss, 15.0});
            worst_skew = std::max({worst_skew, prev_p0 - out.p0, out.p1 - prev_p1});
            prev_p0 = out.p0;
            prev_p1 = out.p1;
        }
        col.add("filter_loss_skew_monotone", worst_skew, 1e-12);
    }

    // --- fock bookkeeping ---------------------------------------------------
    {
        const PhotonDistribution d = poisson_distribution(3.5, 30);
        double tail = 1.0 - d.total();
        col.add("poisson_normalization", std::abs(tail) < 1e-12 ? 0.0 : tail, 1e-12);

        const DensityMatrix rho = random_density(rng);
        double worst = 0.0;
        for (Mode m : {Mode::z, Mode::c, Mode::t})
            worst = std::max(worst,
                             std::abs(mode_number_marginal(rho, m).total() - rho.trace()));
        col.add("marginal_trace_consistency", worst, 1e-12);
    }

    // --- herald properties --------------------------------------------------
    {
        const FilterOutput fc = filter_evolve({3.5, 0.0, 15.0});
        GateParams gp;
        gp.gamma2 = 0.0;
        gp.loss_ratio = 0.0;
        const SourceMetrics m = source_metrics_from_parts(
            fc.dist, fc.dist, CircuitChannel(gp), DetectorParams::ideal());
        col.add("herald_identity_pe_is_multi", std::abs(m.p_e - m.p_multi_input), 1e-12);
        col.add("herald_identity_ps_zero", m.p_s, 1e-12);

        double prev_ps = 2.0, worst = 0.0;
        for (double loss : {0.0, 1e-4, 1e-3, 1e-2}) {
            GateParams g;
            g.gamma2 = 50.0;
            g.loss_ratio = loss;
            const FilterOutput f = filter_evolve({3.5, loss, 15.0});
            const SourceMetrics mm = source_metrics_from_parts(
                f.dist, f.dist, CircuitChannel(g), DetectorParams::realistic());
            worst = std::max(worst, mm.p_s - prev_ps);
            prev_ps = mm.p_s;
        }
        col.add("ps_loss_monotone", worst, 1e-12);

        GateParams g;
        g.gamma2 = 50.0;
        const FilterOutput f = filter_evolve({3.5, 1e-3, 15.0});
        const CircuitChannel channel(g);
        double prev = -1.0;
        worst = 0.0;
        double worst_f = 0.0;
        for (double eta : {0.25, 0.5, 0.75, 1.0}) {
            const SourceMetrics mm =
                source_metrics_from_parts(f.dist, f.dist, channel, {eta, 1e-5});
            worst = std::max(worst, prev - mm.p_s);
            prev = mm.p_s;
            worst_f = std::max(worst_f, std::abs(mm.f - std::sqrt(mm.h)));
        }
        col.add("ps_eta_monotone", worst, 1e-12);
        col.add("f_equals_sqrt_h", worst_f, 1e-12);

        // Pairwise decomposition equals one run of the mixed tensor input.
        const FilterOutput small = filter_evolve({0.5, 1e-3, 15.0});
        const SourceMetrics by_pairs = source_metrics_from_parts(
            small.dist, small.dist, channel, DetectorParams::realistic());
        DensityMatrix mixed;
        double in_space = 0.0;
        for (auto [nc, nt] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}}) {
            const double w = small.dist.prob(nc) * small.dist.prob(nt);
            mixed.elements(space.index(0, nc, nt), space.index(0, nc, nt)) = w;
            in_space += w;
        }
        CircuitOutput out;
        out.rho = channel.apply(mixed);
        const HeraldStats stats = herald_statistics(out, DetectorParams::realistic());
        const double ps_joint = stats.good;
        const double pe_joint = stats.bad + (1.0 - in_space);
        col.add("pair_decomposition_linearity",
                std::max(std::abs(ps_joint - by_pairs.p_s), std::abs(pe_joint - by_pairs.p_e)),
                1e-10);
    }

    // --- CSV determinism -----------------------------------------------------
    {
        SweepConfig cfg;
        cfg.grid = GridSpec{0.0, 2.0, 5, false};
        cfg.workers = 1;
        const std::string serial = run_fig2a(cfg);
        cfg.workers = 4;
        const std::string parallel = run_fig2a(cfg);
        col.add("csv_worker_determinism", serial == parallel ? 0.0 : 1.0, 0.0);
    }

    VerifyReport report;
    report.checks = std::move(col.checks);
    return report;
}

}  // namespace zeno
