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

#include "zenophoton/liouvillian.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace zeno {

namespace {

// vec(rho) is column-major: index(i,j) = i + j*dim for element rho_ij.
inline int vidx(int i, int j, int dim) { return i + j * dim; }

struct Jump {
    int source;
    std::optional<int> feed;
    double rate;
};

std::vector<Jump> expand_jumps(const std::vector<DecayChannel>& channels,
                               const std::vector<std::vector<int>>& occupations) {
    std::vector<Jump> jumps;
    const int dim = static_cast<int>(occupations.size());
    for (const auto& ch : channels) {
        if (ch.rate < 0.0) throw invalid_parameter("DecayChannel: rate must be >= 0");
        if (ch.rate == 0.0) continue;
        if (ch.kind == DecayChannel::Kind::StateDecay) {
            if (ch.source < 0 || ch.source >= dim)
                throw invalid_parameter("DecayChannel: source index out of range");
            if (ch.feed_target && (*ch.feed_target < 0 || *ch.feed_target >= dim))
                throw invalid_parameter("DecayChannel: feed_target index out of range");
            jumps.push_back({ch.source, ch.feed_target, ch.rate});
        } else {
            for (int i = 0; i < dim; ++i) {
                if (ch.mode < 0 || ch.mode >= static_cast<int>(occupations[i].size()))
                    throw invalid_parameter("DecayChannel: mode index out of range");
                int n = occupations[i][ch.mode];
                if (n < 1) continue;
                std::vector<int> target = occupations[i];
                target[ch.mode] -= 1;
                auto it = std::find(occupations.begin(), occupations.end(), target);
                std::optional<int> feed;
                if (it != occupations.end())
                    feed = static_cast<int>(it - occupations.begin());
                jumps.push_back({i, feed, n * ch.rate});
            }
        }
    }
    return jumps;
}

}  // namespace

DecayChannel DecayChannel::state_decay(int source, double rate, std::optional<int> feed) {
    DecayChannel ch;
    ch.kind = Kind::StateDecay;
    ch.source = source;
    ch.rate = rate;
    ch.feed_target = feed;
    return ch;
}

DecayChannel DecayChannel::mode_loss(int mode, double rate) {
    DecayChannel ch;
    ch.kind = Kind::ModeLoss;
    ch.mode = mode;
    ch.rate = rate;
    return ch;
}

Liouvillian build_liouvillian(const CMatrix& h,
                              const std::vector<DecayChannel>& channels,
                              const std::vector<std::vector<int>>& occupations) {
    const int dim = static_cast<int>(occupations.size());
    if (h.rows() != dim || h.cols() != dim)
        throw invalid_parameter("build_liouvillian: Hamiltonian dimension mismatch");
    if (hermiticity_defect(h) > 1e-12)
        throw invalid_parameter("build_liouvillian: Hamiltonian is not Hermitian");

    const auto jumps = expand_jumps(channels, occupations);

    // Total population decay rate per basis state.
    Eigen::VectorXd total_rate = Eigen::VectorXd::Zero(dim);
    for (const auto& j : jumps) total_rate[j.source] += j.rate;

    Liouvillian lv;
    lv.dim = dim;
    lv.generator = CMatrix::Zero(dim * dim, dim * dim);
    lv.sink_row = Eigen::RowVectorXd::Zero(dim * dim);
    lv.max_rate = dim ? total_rate.maxCoeff() : 0.0;

    const Complex mi(0.0, -1.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const int row = vidx(i, j, dim);
            // -i (H rho - rho H)
            for (int k = 0; k < dim; ++k) {
                lv.generator(row, vidx(k, j, dim)) += mi * h(i, k);
                lv.generator(row, vidx(i, k, dim)) -= mi * h(k, j);
            }
            // off-diagonal damping at the mean of the two total rates
            lv.generator(row, row) += -0.5 * (total_rate[i] + total_rate[j]);
        }
    }
    for (const auto& j : jumps) {
        if (j.feed) {
            lv.generator(vidx(*j.feed, *j.feed, dim), vidx(j.source, j.source, dim)) += j.rate;
        } else {
            lv.sink_row[vidx(j.source, j.source, dim)] += j.rate;
        }
    }
    lv.op_norm = lv.generator.cwiseAbs().rowwise().sum().maxCoeff();
    return lv;
}

Liouvillian build_liouvillian(const CMatrix& h,
                              const std::vector<DecayChannel>& channels,
                              const StateSpace& space) {
    std::vector<std::vector<int>> occ;
    occ.reserve(space.dim());
    for (const auto& b : space.basis()) occ.push_back({b.z, b.c, b.t});
    return build_liouvillian(h, channels, occ);
}

EvolveResult evolve_expm(const Liouvillian& lv, const CMatrix& rho0, double s) {
    if (s < 0.0) throw invalid_parameter("evolve_expm: s must be >= 0");
    const int dim = lv.dim;
    if (rho0.rows() != dim || rho0.cols() != dim)
        throw invalid_parameter("evolve_expm: dimension mismatch");
    const int n2 = dim * dim;
    Eigen::Map<const CVector> v0(rho0.data(), n2);

    EvolveResult out;
    if (lv.sink_row.isZero(0.0)) {
        CMatrix prop = (s * lv.generator).exp();
        CVector v = prop * v0;
        out.rho = Eigen::Map<const CMatrix>(v.data(), dim, dim);
        out.absorbed_flux = 0.0;
        return out;
    }
    // Augment with one bookkeeping row so the absorbed probability is
    // integrated by the same exponential.
    CMatrix aug = CMatrix::Zero(n2 + 1, n2 + 1);
    aug.topLeftCorner(n2, n2) = lv.generator;
    aug.row(n2).head(n2) = lv.sink_row.cast<Complex>();
    CMatrix prop = (s * aug).exp();
    CVector w0(n2 + 1);
    w0.head(n2) = v0;
    w0[n2] = 0.0;
    CVector w = prop * w0;
    out.rho = Eigen::Map<const CMatrix>(w.data(), dim, dim);
    out.absorbed_flux = w[n2].real();
    return out;
}

EvolveResult evolve_rk4(const Liouvillian& lv, const CMatrix& rho0, double s, long steps) {
    if (s < 0.0) throw invalid_parameter("evolve_rk4: s must be >= 0");
    if (steps < 1) throw invalid_parameter("evolve_rk4: steps must be >= 1");
    const int dim = lv.dim;
    if (rho0.rows() != dim || rho0.cols() != dim)
        throw invalid_parameter("evolve_rk4: dimension mismatch");

    const double h = s / static_cast<double>(steps);
    if (lv.max_rate * h > 1.0)
        throw stiffness_error("evolve_rk4: step size " + std::to_string(h) +
                              " too large for decay rate " + std::to_string(lv.max_rate));

    const int n2 = dim * dim;
    Eigen::Map<const CVector> v0(rho0.data(), n2);
    CVector v = v0;
    double absorbed = 0.0;
    CVector k1(n2), k2(n2), k3(n2), k4(n2);
    for (long step = 0; step < steps; ++step) {
        k1.noalias() = lv.generator * v;
        k2.noalias() = lv.generator * (v + (h / 2) * k1);
        k3.noalias() = lv.generator * (v + (h / 2) * k2);
        k4.noalias() = lv.generator * (v + h * k3);
        // sink flux shares the same quadrature
        const double f1 = lv.sink_row.dot(v.real());
        const double f2 = lv.sink_row.dot((v + (h / 2) * k1).real());
        const double f3 = lv.sink_row.dot((v + (h / 2) * k2).real());
        const double f4 = lv.sink_row.dot((v + h * k3).real());
        v += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        absorbed += (h / 6) * (f1 + 2 * f2 + 2 * f3 + f4);
    }
    EvolveResult out;
    out.rho = Eigen::Map<const CMatrix>(v.data(), dim, dim);
    out.absorbed_flux = absorbed;
    return out;
}

long suggested_steps(const Liouvillian& lv, double s) {
    const double scale = std::max(lv.op_norm, 1.0);
    return std::max<long>(1, static_cast<long>(std::ceil(s * scale / 0.01)));
}

DensityMatrix evolve_expm(const Liouvillian& lv, const DensityMatrix& rho0, double s) {
    auto r = evolve_expm(lv, rho0.elements, s);
    DensityMatrix out;
    out.space = rho0.space;
    out.elements = std::move(r.rho);
    out.absorbed = rho0.absorbed + r.absorbed_flux;
    return out;
}

DensityMatrix evolve_rk4(const Liouvillian& lv, const DensityMatrix& rho0, double s, long steps) {
    auto r = evolve_rk4(lv, rho0.elements, s, steps);
    DensityMatrix out;
    out.space = rho0.space;
    out.elements = std::move(r.rho);
    out.absorbed = rho0.absorbed + r.absorbed_flux;
    return out;
}

}  // namespace zeno
