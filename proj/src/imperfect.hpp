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

#ifndef PHASEBOUND_IMPERFECT_HPP
#define PHASEBOUND_IMPERFECT_HPP

#include <optional>
#include <span>
#include <vector>

namespace phasebound {

/// Auxiliary transmissivities of a realistic multi-pass loop: state
/// preparation (before the first pass), one round trip (between passes) and
/// measurement (after the last pass). The ideal budget (1,1,1) recovers the
/// lossless-loop formulas exactly.
struct ImperfectionBudget {
    double eta_p;
    double eta_r;
    double eta_m;

    ImperfectionBudget(double eta_p, double eta_r, double eta_m);
};

enum class ImperfectStrategy { Classical, QuantumBound };

/// eta^k * eta_p * eta_m * eta_r^(k-1).
double total_transmissivity(double eta, const ImperfectionBudget& b, int k);

/// Photons lost at the phase element itself over k passes, per n_in input
/// photons: geometric sum eta_p (1-eta) (1-(eta eta_r)^k) / (1 - eta eta_r).
double phase_lost_photons(double eta, const ImperfectionBudget& b, int k,
                          double n_in);

/// Fisher information per photon lost at the phase. The phase is magnified
/// k-fold and the probe sees total transmissivity eta_tot, so the classical
/// value is 4 k^2 eta_tot and the quantum bound 4 k^2 eta_tot/(1-eta_tot),
/// each divided by the per-photon phase loss. SM normalization throughout;
/// the mode factor cancels in every ratio.
double imperfect_fpl(double eta, const ImperfectionBudget& b, int k,
                     ImperfectStrategy strategy);

struct KOptimum {
    int k;
    double fpl;
};

/// Best integer pass count. Scans k = 1..k_max with k_max generous enough
/// that the maximizer is interior; the scan widens itself if it is not.
KOptimum optimize_k(double eta, const ImperfectionBudget& b,
                    ImperfectStrategy strategy);

struct AdvantageResult {
    int k_classical;
    int k_quantum;
    double fpl_classical;
    double fpl_quantum;
    double rmse_reduction;  // 1 - sqrt(fpl_classical / fpl_quantum)
};

/// Quantum-over-classical precision gain with both strategies independently
/// k-optimized under the same budget. Depends on eta_p and eta_m only
/// through their product.
AdvantageResult advantage(double eta, const ImperfectionBudget& b);

/// Highest round-trip transmissivity eta_r at which the quantum advantage
/// exceeds a 20% RMSE reduction, to +/- precision. Descending coarse scan
/// (step 0.01) brackets the crossing, bisection refines it. Absent when no
/// eta_r in (0, 1] reaches 20%.
std::optional<double> threshold_eta_r(double eta, double eta_pm,
                                      double precision = 8e-5);

struct SurfaceCell {
    double eta;
    double eta_pm;
    std::optional<double> threshold;
};

/// threshold_eta_r over a grid; rows ordered by eta then eta_pm.
std::vector<SurfaceCell> surface_grid(std::span<const double> etas,
                                      std::span<const double> eta_pms,
                                      double precision = 8e-5);

}  // namespace phasebound

#endif
