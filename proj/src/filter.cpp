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

#include "zenophoton/filter.hpp"

#include <cmath>

namespace zeno {

void FilterParams::validate() const {
    if (mu < 0.0 || mu > 8.0) throw invalid_parameter("FilterParams: mu must be in [0, 8]");
    if (loss_ratio < 0.0 || loss_ratio > 1.0)
        throw invalid_parameter("FilterParams: loss_ratio must be in [0, 1]");
    if (gamma2 < 0.0) throw invalid_parameter("FilterParams: gamma2 must be >= 0");
}

PhotonDistribution evolve_number_rates(PhotonDistribution initial, double tau,
                                       double loss_gamma, bool tpa_enabled,
                                       const std::function<void(const PhotonDistribution&)>&
                                           step_observer) {
    if (tau < 0.0) throw invalid_parameter("evolve_number_rates: tau must be >= 0");
    if (loss_gamma < 0.0) throw invalid_parameter("evolve_number_rates: loss rate must be >= 0");
    if (tau == 0.0) return initial;

    const int n_max = initial.n_max();
    auto rate = [&](int n) {
        return (tpa_enabled ? 0.5 * n * (n - 1) : 0.0) + loss_gamma * n;
    };
    const double max_rate = rate(n_max);
    // Step small enough that the fixed-step error stays below the 1e-9
    // cross-check tolerance against the full master equation.
    const double h_target = std::min(0.005, 0.01 / std::max(max_rate, 1.0));
    const long steps = std::max<long>(1, static_cast<long>(std::ceil(tau / h_target)));
    const double h = tau / static_cast<double>(steps);

    std::vector<double>& p = initial.probs;
    auto deriv = [&](const std::vector<double>& q, std::vector<double>& dq) {
        for (int n = 0; n <= n_max; ++n) {
            double d = -rate(n) * q[n];
            if (tpa_enabled && n + 2 <= n_max) d += 0.5 * (n + 2) * (n + 1) * q[n + 2];
            if (n + 1 <= n_max) d += loss_gamma * (n + 1) * q[n + 1];
            dq[n] = d;
        }
    };

    std::vector<double> k1(n_max + 1), k2(n_max + 1), k3(n_max + 1), k4(n_max + 1),
        tmp(n_max + 1);
    for (long step = 0; step < steps; ++step) {
        deriv(p, k1);
        for (int n = 0; n <= n_max; ++n) tmp[n] = p[n] + 0.5 * h * k1[n];
        deriv(tmp, k2);
        for (int n = 0; n <= n_max; ++n) tmp[n] = p[n] + 0.5 * h * k2[n];
        deriv(tmp, k3);
        for (int n = 0; n <= n_max; ++n) tmp[n] = p[n] + h * k3[n];
        deriv(tmp, k4);
        for (int n = 0; n <= n_max; ++n)
            p[n] += (h / 6.0) * (k1[n] + 2.0 * k2[n] + 2.0 * k3[n] + k4[n]);
        if (step_observer) step_observer(initial);
    }
    return initial;
}

FilterOutput filter_evolve(const FilterParams& params) {
    params.validate();
    const int n_max = auto_nmax(params.mu);
    PhotonDistribution dist = poisson_distribution(params.mu, n_max);
    const double truncated = 1.0 - dist.total();
    dist = evolve_number_rates(std::move(dist), params.gamma2, params.loss_ratio, true);

    FilterOutput out;
    out.p0 = dist.prob(0);
    out.p1 = dist.prob(1);
    out.p_multi = 0.0;
    for (int n = 2; n <= dist.n_max(); ++n) out.p_multi += dist.probs[n];
    out.absorbed = truncated;
    out.dist = std::move(dist);
    return out;
}

double filter_multi_residual(const FilterParams& params) {
    return filter_evolve(params).p_multi;
}

PhotonDistribution loss_only_check(double mu, double gamma1) {
    if (gamma1 < 0.0) throw invalid_parameter("loss_only_check: gamma1 must be >= 0");
    PhotonDistribution dist = poisson_distribution(mu, auto_nmax(mu));
    return evolve_number_rates(std::move(dist), gamma1, 1.0, false);
}

}  // namespace zeno
