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

#ifndef PHASEBOUND_CHANNELS_HPP
#define PHASEBOUND_CHANNELS_HPP

namespace phasebound {

/// One application of the lossy phase: a phase shift theta plus a
/// transmissive loss eta on the same mode. Phase and loss commute, so k
/// passes act as a single channel with transmissivity eta^k and phase
/// k*theta.
class LossyPhase {
  public:
    /// Intrinsic per-pass parameters. eta is restricted to
    /// [1e-9, 1 - 1e-9]: the optimal-pass formulas diverge as eta -> 1.
    LossyPhase(double eta, double theta);

    double eta() const { return eta_; }
    double theta() const { return theta_; }

  private:
    struct composite_tag {};
    LossyPhase(composite_tag, double eta, double theta)
        : eta_(eta), theta_(theta) {}
    friend LossyPhase compose(const LossyPhase&, const struct PassCount&);

    double eta_;
    double theta_;
};

/// Number of channel applications. Continuous values are meaningful for
/// media whose interaction length can be tuned; discrete marks the
/// integer-restricted setting.
struct PassCount {
    double value;
    bool discrete;

    static PassCount continuous(double k);
    static PassCount integer(long k);
};

/// k-fold composition: (eta, theta) -> (eta^k, k theta). Composite
/// transmissivities may fall below the constructor's lower cutoff.
LossyPhase compose(const LossyPhase& lp, const PassCount& k);

/// Mean photons lost at the phase element for n_in mean input photons.
double lost_photons(const LossyPhase& lp, const PassCount& k, double n_in);

/// Mean photons incident on the phase element; lost = incident * (1 - eta).
double incident_photons(const LossyPhase& lp, const PassCount& k, double n_in);

/// Total photons incident on the phase over n_passes round trips of a
/// coherent probe: n_in * sum_{p=1..N} eta^(p-1).
double classical_incident_photons(double eta, int n_passes, double n_in);

struct NoonComparison {
    double noon_incident;       // all N photons meet the phase once
    double classical_incident;  // geometric decay over N passes
    bool classical_fewer;
};

/// Incident-photon bookkeeping for an N-photon path-entangled probe versus a
/// unit-intensity coherent probe recirculated N times. Equal output
/// information, fewer photons incident for the classical strategy.
NoonComparison noon_comparison(double eta, int n);

}  // namespace phasebound

#endif
