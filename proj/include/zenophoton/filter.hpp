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

#ifndef ZENOPHOTON_FILTER_HPP
#define ZENOPHOTON_FILTER_HPP

#include <functional>

#include "zenophoton/fock.hpp"

namespace zeno {

/// Knobs of one TPA filter cell.  gamma2 is the dimensionless TPA strength
/// R2*L/c accumulated over the cell; loss_ratio is R1/R2.
struct FilterParams {
    double mu = 3.5;
    double loss_ratio = 1e-3;
    double gamma2 = 15.0;

    void validate() const;
};

struct FilterOutput {
    PhotonDistribution dist;
    double p0 = 0.0;
    double p1 = 0.0;
    double p_multi = 0.0;  // sum of probabilities for n >= 2
    double absorbed = 0.0;  // initial truncation deficit (feed mode conserves mass)
};

/// Rate-equation evolution of a photon-number distribution over dimensionless
/// path time tau: pair absorption at n(n-1)/2 and single-photon loss at
/// gamma*n, both feeding downward.  A random laser phase keeps the state
/// diagonal, so this is the whole master equation for the cell.
PhotonDistribution evolve_number_rates(PhotonDistribution initial, double tau,
                                       double loss_gamma, bool tpa_enabled,
                                       const std::function<void(const PhotonDistribution&)>&
                                           step_observer = nullptr);

/// Push a phase-averaged weak coherent pulse through the whole cell.
FilterOutput filter_evolve(const FilterParams& params);

/// Residual multi-photon probability Tr[rho_{n>1}] after the cell.
double filter_multi_residual(const FilterParams& params);

/// Pure-loss run (TPA disabled) with total loss exponent gamma1; the result
/// must be Poisson with mean mu*exp(-gamma1).
PhotonDistribution loss_only_check(double mu, double gamma1);

}  // namespace zeno

#endif
