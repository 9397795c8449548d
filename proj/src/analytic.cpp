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

#include "analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specfun.hpp"

namespace phasebound {

namespace {

void require_eta(double eta) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::domain_error("eta must lie strictly in (0, 1)");
    }
}

void require_k(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::domain_error("pass count k must be positive and finite");
    }
}

// Best integer pass count for the classical objective; the continuous
// optimum's floor/ceil bracket suffices because the objective is unimodal.
long classical_k_discrete(double eta) {
    const double kopt = classical_kopt(eta);
    const long lo = std::max(1L, static_cast<long>(std::floor(kopt)));
    const long hi = std::max(1L, static_cast<long>(std::ceil(kopt)));
    if (lo == hi) return lo;
    return classical_fpl(eta, static_cast<double>(lo), Mode::TM) >=
                   classical_fpl(eta, static_cast<double>(hi), Mode::TM)
               ? lo
               : hi;
}

// Best integer pass count for the quantum bound. Always 1 in practice; the
// scan certifies it instead of assuming it.
long quantum_k_discrete(double eta) {
    long best = 1;
    double best_val = quantum_bound_fpl(eta, 1.0, Mode::TM);
    for (long k = 2; k <= 64; ++k) {
        const double v = quantum_bound_fpl(eta, static_cast<double>(k), Mode::TM);
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }
    return best;
}

}  // namespace

double classical_fpl(double eta, double k, Mode mode) {
    require_eta(eta);
    require_k(k);
    const double g = std::pow(eta, k);
    return mode_factor(mode) * g * k * k / (1.0 - g);
}

double classical_kopt(double eta) {
    require_eta(eta);
    return metrology_constants().k_coeff / -std::log(eta);
}

StrategyEvaluation classical_fpl_opt(double eta, Mode mode, bool discrete) {
    require_eta(eta);
    StrategyEvaluation ev;
    ev.strategy = Strategy::ClassicalMp;
    ev.mode = mode;
    ev.eta = eta;
    if (discrete) {
        const long k = classical_k_discrete(eta);
        ev.k = static_cast<double>(k);
        ev.fisher_per_lost = classical_fpl(eta, static_cast<double>(k), mode);
    } else {
        const double lg = std::log(eta);
        ev.k = classical_kopt(eta);
        ev.fisher_per_lost =
            mode_factor(mode) * metrology_constants().cl_const / (lg * lg);
    }
    return ev;
}

double quantum_bound_fpl(double eta, double k, Mode mode) {
    require_eta(eta);
    require_k(k);
    const double g = std::pow(eta, k);
    const double denom = 1.0 - g;
    return mode_factor(mode) * g * k * k / (denom * denom);
}

double quantum_bound_limit(double eta, Mode mode) {
    require_eta(eta);
    const double lg = std::log(eta);
    return mode_factor(mode) / (lg * lg);
}

double advantage_ratio(double eta, bool discrete, QuantumNorm norm) {
    require_eta(eta);
    if (!discrete) {
        return metrology_constants().advantage_ratio;
    }
    const double cl = classical_fpl_opt(eta, Mode::TM, true).fisher_per_lost;
    const double q =
        norm == QuantumNorm::ContinuousLimit
            ? quantum_bound_limit(eta, Mode::TM)
            : quantum_bound_fpl(
                  eta, static_cast<double>(quantum_k_discrete(eta)), Mode::TM);
    return std::sqrt(cl / q);
}

const char* scan_strategy_name(ScanStrategy s) {
    switch (s) {
        case kScanClassicalDiscrete: return "classical_mp_discrete";
        case kScanClassicalContinuous: return "classical_mp_continuous";
        case kScanQuantumDiscrete: return "quantum_bound_discrete";
        default: return "unknown";
    }
}

std::vector<ScanRow> fig2a_scan(std::span<const double> eta_grid,
                                unsigned strategy_mask, Mode mode) {
    std::vector<double> etas(eta_grid.begin(), eta_grid.end());
    std::sort(etas.begin(), etas.end());
    std::vector<ScanRow> rows;
    for (double eta : etas) {
        require_eta(eta);
        const double qlim = quantum_bound_limit(eta, mode);
        auto emit = [&](ScanStrategy s, double k, double fpl) {
            rows.push_back({eta, s, k, fpl, std::sqrt(fpl / qlim)});
        };
        if (strategy_mask & kScanClassicalDiscrete) {
            const auto ev = classical_fpl_opt(eta, mode, true);
            emit(kScanClassicalDiscrete, *ev.k, ev.fisher_per_lost);
        }
        if (strategy_mask & kScanClassicalContinuous) {
            const auto ev = classical_fpl_opt(eta, mode, false);
            emit(kScanClassicalContinuous, *ev.k, ev.fisher_per_lost);
        }
        if (strategy_mask & kScanQuantumDiscrete) {
            const long k = quantum_k_discrete(eta);
            emit(kScanQuantumDiscrete, static_cast<double>(k),
                 quantum_bound_fpl(eta, static_cast<double>(k), mode));
        }
    }
    return rows;
}

}  // namespace phasebound
