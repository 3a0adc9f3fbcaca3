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

#ifndef ZENOPHOTON_HERALD_HPP
#define ZENOPHOTON_HERALD_HPP

#include "zenophoton/filter.hpp"
#include "zenophoton/zeno_gate.hpp"

namespace zeno {

/// Threshold detector: quantum efficiency eta, dark-count probability per
/// pulse.
struct DetectorParams {
    double eta = 1.0;
    double dark = 0.0;

    static DetectorParams ideal() { return {1.0, 0.0}; }
    static DetectorParams realistic() { return {0.75, 1e-5}; }
    void validate() const;
};

struct SourceMetrics {
    double p_s = 0.0;       // heralded single-photon probability per shot
    double p_e = 0.0;       // false-trigger probability per shot
    double h = 0.0;         // heralding efficiency P_s / (P_s + P_e)
    double f = 0.0;         // sqrt(h)
    double p_multi_input = 0.0;  // out-of-space input mass, counted into p_e
    double conditional_p1 = 0.0;  // <1|rho|1> of the heralded mode-c state
};

/// Probability that a threshold detector clicks on n photons:
/// 1 - (1-dark)(1-eta)^n.
double click_probability(int n, const DetectorParams& det);

struct HeraldStats {
    double good = 0.0;  // herald fired and mode c holds exactly one photon
    double bad = 0.0;   // herald fired with anything else in mode c
};

/// Herald event = D_z clicks and the T1 veto detector D_t stays silent,
/// evaluated over the diagonal of the circuit output.
HeraldStats herald_statistics(const CircuitOutput& output, const DetectorParams& det);

/// Full operating point: filter both arms, mix the circuit over the in-space
/// occupation pairs, count everything else as error mass.
SourceMetrics source_point(const FilterParams& fp_c, const FilterParams& fp_t,
                           const GateParams& gp, const DetectorParams& det);

/// Same combination from already-computed parts; sweeps use this to share the
/// filter solutions and the circuit superoperator across grid cells.
SourceMetrics source_metrics_from_parts(const PhotonDistribution& dist_c,
                                        const PhotonDistribution& dist_t,
                                        const CircuitChannel& channel,
                                        const DetectorParams& det);

}  // namespace zeno

#endif
