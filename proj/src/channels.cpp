// Copyright 2026 The Phasebound Authors
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

#include "channels.hpp"

#include <cmath>
#include <stdexcept>

namespace phasebound {

LossyPhase::LossyPhase(double eta, double theta) : eta_(eta), theta_(theta) {
    if (!(eta >= 1e-9 && eta <= 1.0 - 1e-9)) {
        throw std::domain_error("LossyPhase: eta must lie in [1e-9, 1-1e-9]");
    }
    if (!std::isfinite(theta)) {
        throw std::domain_error("LossyPhase: theta must be finite");
    }
}

PassCount PassCount::continuous(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::domain_error("PassCount: k must be positive and finite");
    }
    return {k, false};
}

PassCount PassCount::integer(long k) {
    if (k < 1) {
        throw std::domain_error("PassCount: integer k must be >= 1");
    }
    return {static_cast<double>(k), true};
}

LossyPhase compose(const LossyPhase& lp, const PassCount& k) {
    return LossyPhase(LossyPhase::composite_tag{}, std::pow(lp.eta(), k.value),
                      k.value * lp.theta());
}

double lost_photons(const LossyPhase& lp, const PassCount& k, double n_in) {
    if (n_in < 0.0) throw std::domain_error("lost_photons: n_in must be >= 0");
    return n_in * (1.0 - std::pow(lp.eta(), k.value));
}

double incident_photons(const LossyPhase& lp, const PassCount& k, double n_in) {
    return lost_photons(lp, k, n_in) / (1.0 - lp.eta());
}

double classical_incident_photons(double eta, int n_passes, double n_in) {
    if (n_passes < 1) {
        throw std::domain_error("classical_incident_photons: n_passes must be >= 1");
    }
    if (eta == 1.0) return n_in * n_passes;
    return n_in * (1.0 - std::pow(eta, n_passes)) / (1.0 - eta);
}

NoonComparison noon_comparison(double eta, int n) {
    if (n < 1) throw std::domain_error("noon_comparison: n must be >= 1");
    NoonComparison out;
    out.noon_incident = static_cast<double>(n);
    out.classical_incident = classical_incident_photons(eta, n, 1.0);
    out.classical_fewer = out.classical_incident < out.noon_incident;
    return out;
}

}  // namespace phasebound
