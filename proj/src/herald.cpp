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

#include "zenophoton/herald.hpp"

#include <cmath>

namespace zeno {

void DetectorParams::validate() const {
    if (eta < 0.0 || eta > 1.0) throw invalid_parameter("DetectorParams: eta must be in [0, 1]");
    if (dark < 0.0 || dark >= 1.0)
        throw invalid_parameter("DetectorParams: dark must be in [0, 1)");
}

double click_probability(int n, const DetectorParams& det) {
    if (n < 0) throw invalid_parameter("click_probability: n must be >= 0");
    det.validate();
    return 1.0 - (1.0 - det.dark) * std::pow(1.0 - det.eta, n);
}

HeraldStats herald_statistics(const CircuitOutput& output, const DetectorParams& det) {
    det.validate();
    const auto& space = *output.rho.space;
    HeraldStats stats;
    for (int i = 0; i < space.dim(); ++i) {
        const auto& occ = space.occupation(i);
        const double population = output.rho.elements(i, i).real();
        const double herald_weight =
            click_probability(occ.z, det) * (1.0 - click_probability(occ.t, det));
        if (occ.c == 1)
            stats.good += population * herald_weight;
        else
            stats.bad += population * herald_weight;
    }
    return stats;
}

SourceMetrics source_metrics_from_parts(const PhotonDistribution& dist_c,
                                        const PhotonDistribution& dist_t,
                                        const CircuitChannel& channel,
                                        const DetectorParams& det) {
    det.validate();
    // Occupation pairs that live in the truncated circuit space.
    static constexpr std::pair<int, int> kPairs[] = {{0, 0}, {0, 1}, {1, 0},
                                                     {1, 1}, {0, 2}, {2, 0}};
    double in_space_weight = 0.0;
    SourceMetrics m;
    for (const auto& [n_c, n_t] : kPairs) {
        const double weight = dist_c.prob(n_c) * dist_t.prob(n_t);
        in_space_weight += weight;
        if (weight <= 0.0) continue;
        const HeraldStats stats = herald_statistics(channel.run(n_c, n_t), det);
        m.p_s += weight * stats.good;
        m.p_e += weight * stats.bad;
    }
    // Everything else (any occupation above 2 or total above 2) is counted
    // as an error outright.
    m.p_multi_input = std::max(0.0, 1.0 - in_space_weight);
    m.p_e += m.p_multi_input;
    if (m.p_s + m.p_e > 0.0) m.h = m.p_s / (m.p_s + m.p_e);
    m.f = std::sqrt(m.h);
    m.conditional_p1 = m.h;  // <1|rho|1> of the heralded mode-c state
    return m;
}

SourceMetrics source_point(const FilterParams& fp_c, const FilterParams& fp_t,
                           const GateParams& gp, const DetectorParams& det) {
    const FilterOutput fc = filter_evolve(fp_c);
    const FilterOutput ft = filter_evolve(fp_t);
    const CircuitChannel channel(gp);
    return source_metrics_from_parts(fc.dist, ft.dist, channel, det);
}

}  // namespace zeno
