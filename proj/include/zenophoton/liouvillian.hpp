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

#ifndef ZENOPHOTON_LIOUVILLIAN_HPP
#define ZENOPHOTON_LIOUVILLIAN_HPP

#include <optional>
#include <vector>

#include "zenophoton/fock.hpp"

namespace zeno {

/// One incoherent channel added on top of the commutator dynamics.
///
/// StateDecay: the basis state `source` loses population at `rate`; the
/// population reappears on feed_target's diagonal, or is removed to the sink
/// when feed_target is absent.
///
/// ModeLoss: every basis state with occupation n >= 1 in `mode` decays at
/// n * rate toward the state with one photon fewer in that mode.
struct DecayChannel {
    enum class Kind { StateDecay, ModeLoss };

    Kind kind = Kind::StateDecay;
    double rate = 0.0;
    int source = -1;  // StateDecay only
    int mode = -1;    // ModeLoss only
    std::optional<int> feed_target;  // StateDecay only; absent -> sink

    static DecayChannel state_decay(int source, double rate, std::optional<int> feed);
    static DecayChannel mode_loss(int mode, double rate);
};

/// Generator of density-matrix evolution, vectorized column-major: population
/// decay at each channel's rate, off-diagonal decay at the arithmetic mean of
/// the two total rates, feed terms onto the target diagonals, and a sink row
/// capturing the flux that leaves the space.
struct Liouvillian {
    int dim = 0;
    CMatrix generator;             // dim^2 x dim^2
    Eigen::RowVectorXd sink_row;   // dim^2, real flux into the sink
    double max_rate = 0.0;         // largest total population decay rate
    double op_norm = 0.0;          // inf-norm of the generator, for step control
};

/// Assemble rho_dot = -i [h, rho] + dissipators.  `occupations` gives the
/// per-mode photon numbers of each basis state and is used to expand ModeLoss
/// channels (pass one entry per basis state; any mode count works).
Liouvillian build_liouvillian(const CMatrix& h,
                              const std::vector<DecayChannel>& channels,
                              const std::vector<std::vector<int>>& occupations);

/// Convenience for the canonical three-mode space.
Liouvillian build_liouvillian(const CMatrix& h,
                              const std::vector<DecayChannel>& channels,
                              const StateSpace& space);

struct EvolveResult {
    CMatrix rho;
    double absorbed_flux = 0.0;  // probability that crossed into the sink
};

/// rho(s) = exp(s G) rho0, with the sink flux integrated exactly through an
/// augmented exponential.
EvolveResult evolve_expm(const Liouvillian& lv, const CMatrix& rho0, double s);

/// Classical fixed-step fourth-order integration; refuses when the step is
/// too large for the fastest decay rate.
EvolveResult evolve_rk4(const Liouvillian& lv, const CMatrix& rho0, double s, long steps);

/// Step count that keeps the local truncation error well below 1e-8.
long suggested_steps(const Liouvillian& lv, double s);

DensityMatrix evolve_expm(const Liouvillian& lv, const DensityMatrix& rho0, double s);
DensityMatrix evolve_rk4(const Liouvillian& lv, const DensityMatrix& rho0, double s, long steps);

}  // namespace zeno

#endif
