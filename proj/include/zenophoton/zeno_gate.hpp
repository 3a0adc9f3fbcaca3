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

#ifndef ZENOPHOTON_ZENO_GATE_HPP
#define ZENOPHOTON_ZENO_GATE_HPP

#include <string>

#include "zenophoton/liouvillian.hpp"

namespace zeno {

/// Zeno-gate knobs.  gamma2 = R2 * dt is the TPA strength accumulated over
/// one gate transit; the coherent evolution always runs the fixed angle pi/2,
/// so gamma2 and loss_ratio are the only surviving parameters.
struct GateParams {
    double gamma2 = 100.0;
    double loss_ratio = 0.0;
    bool feed_vacuum = true;  // false routes absorbed mass to the sink instead
    bool lossy_z = false;     // optionally expose the spectator rail to loss

    double gamma1() const { return loss_ratio * gamma2; }
    void validate() const;
};

/// 50/50 beam splitter pair on modes z and t, lifted to the full truncated
/// space with bosonic normalization.  Block diagonal: identity on vacuum, the
/// single-photon Hadamard on the one-photon states, its two-photon image on
/// the rest.  The matrix is its own inverse.
CMatrix hadamard_unitary(const StateSpace& space);

/// Matrix of c^dag t + t^dag c (in units of the coupling strength).
CMatrix coupling_hamiltonian(const StateSpace& space);

/// Liouvillian of the gate interior: coupling Hamiltonian at angle pi/2, TPA
/// decay of |020> and |002>, per-photon loss on modes c and t.
Liouvillian gate_liouvillian(const GateParams& params);

/// One transit through the TPA-coupled region followed by the fixed per-mode
/// pi/2 phase shift on c and t.  With gamma2 = 0 this is an exact SWAP of
/// modes c and t (phase conventions make single-photon transfer come out +1).
DensityMatrix swap_prime(const DensityMatrix& rho, const GateParams& params);

/// Relabel modes c <-> t; an involution.
DensityMatrix reverse_outputs(const DensityMatrix& rho);

struct CircuitOutput {
    DensityMatrix rho;
    double absorbed = 0.0;
    std::string input_label;
};

/// Full heralding circuit: Hadamard, SWAP', output reversal, Hadamard, fed
/// with |0 n_c n_t>.
CircuitOutput run_circuit(int n_c, int n_t, const GateParams& params);

/// Precomputed superoperator of the full circuit, for sweeps that push many
/// inputs through the same gate configuration.
class CircuitChannel {
  public:
    explicit CircuitChannel(const GateParams& params);

    DensityMatrix apply(const DensityMatrix& rho) const;
    CircuitOutput run(int n_c, int n_t) const;

  private:
    CMatrix map_;  // 100 x 100 vectorized map
    Eigen::RowVectorXd sink_;
};

/// Phase-flip figure of merit S(gamma2): fidelity between the gate acting on
/// the probe (|000> + |011>)/sqrt(2) and the ideal SWAP' output
/// (|000> - |011>)/sqrt(2).  A density-matrix overlap with a plain |011>
/// target would be blind to the sign, so the vacuum superposition carries it.
double phase_flip_fidelity(const GateParams& params);

}  // namespace zeno

#endif
