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

#include "imperfect.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "analytic.hpp"
#include "scalar_search.hpp"

namespace phasebound {

namespace {

void require_eta(double eta) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::domain_error("eta must lie strictly in (0, 1)");
    }
}

double check_aux(double v, const char* name) {
    if (!(v > 0.0 && v <= 1.0)) {
        throw std::domain_error(std::string(name) +
                                " must lie in (0, 1]");
    }
    return v;
}

}  // namespace

ImperfectionBudget::ImperfectionBudget(double eta_p, double eta_r, double eta_m)
    : eta_p(check_aux(eta_p, "eta_p")),
      eta_r(check_aux(eta_r, "eta_r")),
      eta_m(check_aux(eta_m, "eta_m")) {}

double total_transmissivity(double eta, const ImperfectionBudget& b, int k) {
    require_eta(eta);
    if (k < 1) throw std::domain_error("total_transmissivity: k must be >= 1");
    return std::pow(eta, k) * b.eta_p * b.eta_m * std::pow(b.eta_r, k - 1);
}

double phase_lost_photons(double eta, const ImperfectionBudget& b, int k,
                          double n_in) {
    require_eta(eta);
    if (k < 1) throw std::domain_error("phase_lost_photons: k must be >= 1");
    const double x = eta * b.eta_r;  // < 1 since eta < 1
    return n_in * b.eta_p * (1.0 - eta) * (1.0 - std::pow(x, k)) / (1.0 - x);
}

double imperfect_fpl(double eta, const ImperfectionBudget& b, int k,
                     ImperfectStrategy strategy) {
    const double t = total_transmissivity(eta, b, k);
    const double lost = phase_lost_photons(eta, b, k, 1.0);
    double f = 4.0 * k * k * t;
    if (strategy == ImperfectStrategy::QuantumBound) f /= (1.0 - t);
    return f / lost;
}

KOptimum optimize_k(double eta, const ImperfectionBudget& b,
                    ImperfectStrategy strategy) {
    int k_max =
        10 * static_cast<int>(std::ceil(classical_kopt(eta))) + 10;
    for (;;) {
        KOptimum best{1, imperfect_fpl(eta, b, 1, strategy)};
        for (int k = 2; k <= k_max; ++k) {
            const double v = imperfect_fpl(eta, b, k, strategy);
            if (v > best.fpl) best = {k, v};
        }
        if (best.k < k_max || k_max > (1 << 22)) return best;
        k_max *= 2;  // maximizer on the boundary: widen until interior
    }
}

AdvantageResult advantage(double eta, const ImperfectionBudget& b) {
    const KOptimum cl = optimize_k(eta, b, ImperfectStrategy::Classical);
    const KOptimum q = optimize_k(eta, b, ImperfectStrategy::QuantumBound);
    AdvantageResult out;
    out.k_classical = cl.k;
    out.k_quantum = q.k;
    out.fpl_classical = cl.fpl;
    out.fpl_quantum = q.fpl;
    out.rmse_reduction = 1.0 - std::sqrt(cl.fpl / q.fpl);
    return out;
}

std::optional<double> threshold_eta_r(double eta, double eta_pm,
                                      double precision) {
    require_eta(eta);
    check_aux(eta_pm, "eta_pm");
    if (!(precision > 0.0)) {
        throw std::domain_error("threshold_eta_r: precision must be > 0");
    }
    auto exceeds = [&](double eta_r) {
        const ImperfectionBudget b(1.0, eta_r, eta_pm);
        return advantage(eta, b).rmse_reduction > 0.20;
    };
    if (exceeds(1.0)) return 1.0;
    // Coarse descent to bracket the highest crossing, then bisection.
    double hi = 1.0;
    double lo = hi;
    bool found = false;
    while (lo > precision) {
        const double next = std::max(lo - 0.01, 0.5 * precision);
        if (exceeds(next)) {
            hi = lo;
            lo = next;
            found = true;
            break;
        }
        lo = next;
    }
    if (!found) return std::nullopt;
    return bisect_boundary(exceeds, lo, hi, precision);
}

std::vector<SurfaceCell> surface_grid(std::span<const double> etas,
                                      std::span<const double> eta_pms,
                                      double precision) {
    std::vector<SurfaceCell> cells;
    cells.reserve(etas.size() * eta_pms.size());
    for (double eta : etas) {
        for (double pm : eta_pms) {
            cells.push_back({eta, pm, threshold_eta_r(eta, pm, precision)});
        }
    }
    return cells;
}

}  // namespace phasebound
