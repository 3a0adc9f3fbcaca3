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

#include "zenophoton/fock.hpp"

#include <cmath>

namespace zeno {

StateSpace::StateSpace()
    : basis_{{{0, 0, 0},
              {0, 0, 1},
              {0, 1, 0},
              {1, 0, 0},
              {0, 1, 1},
              {0, 0, 2},
              {0, 2, 0},
              {1, 0, 1},
              {1, 1, 0},
              {2, 0, 0}}} {}

const StateSpace& StateSpace::canonical() {
    static const StateSpace space;
    return space;
}

bool StateSpace::contains(int n_z, int n_c, int n_t) const {
    return n_z >= 0 && n_c >= 0 && n_t >= 0 && n_z + n_c + n_t <= 2;
}

int StateSpace::index(int n_z, int n_c, int n_t) const {
    if (!contains(n_z, n_c, n_t)) {
        throw out_of_space("occupation (" + std::to_string(n_z) + "," + std::to_string(n_c) +
                           "," + std::to_string(n_t) + ") outside the two-photon space");
    }
    for (int i = 0; i < kDim; ++i) {
        if (basis_[i].z == n_z && basis_[i].c == n_c && basis_[i].t == n_t) return i;
    }
    throw out_of_space("basis enumeration is broken");  // unreachable
}

double PhotonDistribution::total() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

PhotonDistribution poisson_distribution(double mu, int n_max) {
    if (mu < 0.0) throw invalid_parameter("poisson_distribution: mu must be >= 0");
    if (n_max < 1) throw invalid_parameter("poisson_distribution: n_max must be >= 1");
    PhotonDistribution dist;
    dist.probs.resize(n_max + 1, 0.0);
    double term = std::exp(-mu);
    dist.probs[0] = term;
    for (int n = 1; n <= n_max; ++n) {
        term *= mu / n;
        dist.probs[n] = term;
    }
    return dist;
}

int auto_nmax(double mu) {
    if (mu < 0.0 || mu > 8.0) throw invalid_parameter("auto_nmax: mu must be in [0, 8]");
    constexpr double kTailTol = 1e-12;
    long double term = std::exp(-(long double)mu);
    long double cum = term;
    int n = 0;
    while ((long double)1.0 - cum >= kTailTol && n < 40) {
        ++n;
        term *= mu / n;
        cum += term;
    }
    return std::max(n, 1);
}

DensityMatrix basis_state(const StateSpace& space, int n_z, int n_c, int n_t) {
    DensityMatrix rho;
    rho.space = &space;
    rho.elements = CMatrix::Zero(space.dim(), space.dim());
    int i = space.index(n_z, n_c, n_t);
    rho.elements(i, i) = 1.0;
    return rho;
}

PhotonDistribution mode_number_marginal(const DensityMatrix& rho, Mode mode) {
    int m = static_cast<int>(mode);
    int n_top = 0;
    for (const auto& occ : rho.space->basis()) n_top = std::max(n_top, occ[m]);
    PhotonDistribution dist;
    dist.probs.resize(std::max(n_top, 1) + 1, 0.0);
    for (int i = 0; i < rho.space->dim(); ++i) {
        dist.probs[rho.space->occupation(i)[m]] += rho.elements(i, i).real();
    }
    return dist;
}

double hermiticity_defect(const CMatrix& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double min_diagonal(const CMatrix& m) {
    return m.diagonal().real().minCoeff();
}

double min_eigenvalue(const CMatrix& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es((m + m.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff();
}

}  // namespace zeno
