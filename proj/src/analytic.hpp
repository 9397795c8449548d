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

#ifndef PHASEBOUND_ANALYTIC_HPP
#define PHASEBOUND_ANALYTIC_HPP

#include <optional>
#include <span>
#include <vector>

namespace phasebound {

/// Estimation geometry. A single-mode phase read out against an ideal
/// reference beam carries four times the information per lost photon of the
/// two-mode differential phase; every quantity here obeys SM = 4 * TM.
enum class Mode { TM, SM };

inline double mode_factor(Mode m) { return m == Mode::SM ? 4.0 : 1.0; }

enum class Strategy { ClassicalMp, QuantumBoundMp, QuantumBoundLimit };

/// Which quantum yardstick a discrete classical optimum is measured against:
/// the continuous-pass limit, or the best integer-pass quantum bound.
enum class QuantumNorm { ContinuousLimit, DiscreteBest };

struct StrategyEvaluation {
    Strategy strategy;
    Mode mode;
    double eta;
    std::optional<double> k;  // absent for limit strategies
    double fisher_per_lost;
};

/// Fisher information per lost photon of a coherent probe making k passes:
/// eta^k k^2 / (1 - eta^k), times 4 in SM. Independent of probe intensity.
double classical_fpl(double eta, double k, Mode mode);

/// Pass count maximizing classical_fpl over continuous k.
double classical_kopt(double eta);

/// Optimal classical multi-pass evaluation. Continuous k gives
/// cl_const / ln^2(eta); discrete k is the better of floor/ceil of the
/// continuous optimum (the objective is unimodal in k).
StrategyEvaluation classical_fpl_opt(double eta, Mode mode, bool discrete);

/// Upper bound on any probe's Fisher information per lost photon at k
/// passes: eta^k k^2 / (1 - eta^k)^2, times 4 in SM.
double quantum_bound_fpl(double eta, double k, Mode mode);

/// k -> 0 supremum of the multi-pass quantum bound: 1/ln^2(eta) (TM) or
/// 4/ln^2(eta) (SM).
double quantum_bound_limit(double eta, Mode mode);

/// Classical-to-quantum RMSE ratio sqrt(F'_cl / Q'). Mode-independent.
/// Continuous k yields the universal constant ~0.8047. With discrete k the
/// classical side uses the best integer pass count and `norm` selects the
/// quantum yardstick.
double advantage_ratio(double eta, bool discrete,
                       QuantumNorm norm = QuantumNorm::ContinuousLimit);

enum ScanStrategy : unsigned {
    kScanClassicalDiscrete = 1u << 0,
    kScanClassicalContinuous = 1u << 1,
    kScanQuantumDiscrete = 1u << 2,
    kScanAllAnalytic = kScanClassicalDiscrete | kScanClassicalContinuous |
                       kScanQuantumDiscrete,
};

struct ScanRow {
    double eta;
    ScanStrategy strategy;
    double k;
    double fisher_per_lost;
    double normalized_precision;  // sqrt(F' / Q'_limit) in the scan's mode
};

const char* scan_strategy_name(ScanStrategy s);

/// Normalized-precision scan across an eta grid for the requested
/// strategies; rows ordered by eta, then by strategy enum order.
std::vector<ScanRow> fig2a_scan(std::span<const double> eta_grid,
                                unsigned strategy_mask, Mode mode);

}  // namespace phasebound

#endif
