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

#include "network.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scalar_search.hpp"

namespace phasebound {

namespace {

using cd = std::complex<double>;

struct Module {
    // M = diag(1, damp) * BS(xi) with damp = e^{i(k theta + phi)} eta^{k/2}.
    double c, s;  // cos(xi/2), sin(xi/2)
    cd damp;
    double k;
};

Module make_module(const NetworkConfig& cfg, double theta) {
    Module m;
    m.c = std::cos(cfg.xi / 2.0);
    m.s = std::sin(cfg.xi / 2.0);
    const double phase = cfg.k * theta + cfg.phi_control;
    m.damp = std::polar(std::pow(cfg.eta, cfg.k / 2.0), phase);
    m.k = cfg.k;
    return m;
}

// Propagates the first column of T and its theta-derivative through h
// modules. O(h), no allocation.
struct ColumnState {
    cd t1{1.0, 0.0}, t2{0.0, 0.0};
    cd d1{0.0, 0.0}, d2{0.0, 0.0};

    void advance(const Module& m) {
        const cd u1 = m.c * t1 - m.s * t2;
        const cd u2 = m.damp * (m.s * t1 + m.c * t2);
        const cd v1 = m.c * d1 - m.s * d2;
        const cd v2 = m.damp * (m.s * d1 + m.c * d2);
        d1 = v1;
        d2 = v2 + cd(0.0, m.k) * u2;  // d(damp)/dtheta = i k damp
        t1 = u1;
        t2 = u2;
    }
};

void column_and_derivative(const NetworkConfig& cfg, double theta,
                           ColumnState& st) {
    const Module m = make_module(cfg, theta);
    for (int i = 0; i < cfg.h; ++i) st.advance(m);
}

double fpl_from_column(const ColumnState& st) {
    const double kept = std::norm(st.t1) + std::norm(st.t2);
    const double lost = 1.0 - kept;
    if (lost <= 1e-15) {
        throw std::domain_error("network_fpl: no photons lost at this setting");
    }
    return 4.0 * (std::norm(st.d1) + std::norm(st.d2)) / lost;
}

// F' at eta = gamma, k = 1, module phase 0; building block of both
// campaigns after reparameterization.
double fpl_gamma(double gamma, double xi, int h) {
    NetworkConfig cfg(h, 1.0, xi, 0.0, gamma);
    ColumnState st;
    column_and_derivative(cfg, 0.0, st);
    return fpl_from_column(st);
}

double continuous_ratio(double gamma, double hxi, int h) {
    const double lg = std::log(gamma);
    return lg * lg * fpl_gamma(gamma, hxi / h, h) / 4.0;
}

constexpr double kGammaLo = 1e-4;
constexpr double kGammaHi = 1.0 - 1e-9;

struct Candidate {
    double gamma, hxi, ratio;
};

Candidate coordinate_descent(int h, double gamma, double hxi, double hxi_min,
                             double hxi_max, int max_sweeps = 12) {
    double best = continuous_ratio(gamma, hxi, h);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        auto fg = [&](double g) { return continuous_ratio(g, hxi, h); };
        const auto mg = scan_then_golden(fg, kGammaLo, kGammaHi, 41, 1e-10);
        gamma = mg.x;
        auto fx = [&](double x) { return continuous_ratio(gamma, x, h); };
        const auto mx = scan_then_golden(fx, hxi_min, hxi_max, 41, 1e-10);
        hxi = mx.x;
        if (mx.value <= best * (1.0 + 1e-12)) {
            best = std::max(best, mx.value);
            break;
        }
        best = mx.value;
    }
    return {gamma, hxi, best};
}

}  // namespace

NetworkConfig::NetworkConfig(int h, double k, double xi, double phi_control,
                             double eta)
    : h(h), k(k), xi(xi), phi_control(phi_control), eta(eta) {
    if (h < 1) throw std::domain_error("NetworkConfig: h must be >= 1");
    if (!(k > 0.0)) throw std::domain_error("NetworkConfig: k must be > 0");
    if (!(xi > 0.0 && xi < 2.0 * std::numbers::pi)) {
        throw std::domain_error("NetworkConfig: xi must lie in (0, 2 pi)");
    }
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::domain_error("NetworkConfig: eta must lie in (0, 1)");
    }
}

double max_singular_value(const TransferMatrix& t) {
    // Singular values of a 2x2 from the Frobenius norm and determinant.
    const double f = std::norm(t.t11) + std::norm(t.t12) + std::norm(t.t21) +
                     std::norm(t.t22);
    const double det = std::abs(t.t11 * t.t22 - t.t12 * t.t21);
    const double disc = std::max(f * f - 4.0 * det * det, 0.0);
    return std::sqrt(0.5 * (f + std::sqrt(disc)));
}

TransferMatrix transfer_matrix(const NetworkConfig& cfg, double theta) {
    const Module m = make_module(cfg, theta);
    TransferMatrix t{1.0, 0.0, 0.0, 1.0};
    for (int i = 0; i < cfg.h; ++i) {
        const cd r1a = m.c * t.t11 - m.s * t.t21;
        const cd r1b = m.c * t.t12 - m.s * t.t22;
        const cd r2a = m.damp * (m.s * t.t11 + m.c * t.t21);
        const cd r2b = m.damp * (m.s * t.t12 + m.c * t.t22);
        t = {r1a, r1b, r2a, r2b};
    }
    return t;
}

TransferMatrix transfer_matrix_dtheta(const NetworkConfig& cfg, double theta) {
    const Module m = make_module(cfg, theta);
    TransferMatrix t{1.0, 0.0, 0.0, 1.0};
    TransferMatrix d{0.0, 0.0, 0.0, 0.0};
    const cd ik(0.0, m.k);
    for (int i = 0; i < cfg.h; ++i) {
        const cd u11 = m.c * t.t11 - m.s * t.t21;
        const cd u12 = m.c * t.t12 - m.s * t.t22;
        const cd u21 = m.damp * (m.s * t.t11 + m.c * t.t21);
        const cd u22 = m.damp * (m.s * t.t12 + m.c * t.t22);
        const cd v11 = m.c * d.t11 - m.s * d.t21;
        const cd v12 = m.c * d.t12 - m.s * d.t22;
        const cd v21 = m.damp * (m.s * d.t11 + m.c * d.t21);
        const cd v22 = m.damp * (m.s * d.t12 + m.c * d.t22);
        d = {v11, v12, v21 + ik * u21, v22 + ik * u22};
        t = {u11, u12, u21, u22};
    }
    return d;
}

double network_fpl(const NetworkConfig& cfg, double theta) {
    ColumnState st;
    column_and_derivative(cfg, theta, st);
    return fpl_from_column(st);
}

NetworkOptimum optimize_network(double eta, int h_max, double hxi_min,
                                double hxi_max) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::domain_error("optimize_network: eta must lie in (0, 1)");
    }
    if (h_max < 1) throw std::domain_error("optimize_network: h_max must be >= 1");
    if (!(hxi_min > 0.0 && hxi_max > hxi_min)) {
        throw std::domain_error("optimize_network: bad h*xi window");
    }
    NetworkOptimum best{eta, 0, 0.0, 0.0, -1.0, 0.0};
    for (int h = 1; h <= h_max; ++h) {
        auto f = [&](double xi) { return fpl_gamma(eta, xi, h); };
        const auto m = scan_then_golden(f, hxi_min / h, hxi_max / h, 32, 1e-10);
        if (m.value > best.fpl) {
            best.h = h;
            best.xi = m.x;
            best.h_xi = h * m.x;
            best.fpl = m.value;
        }
    }
    const double qsm = 4.0 * eta / ((1.0 - eta) * (1.0 - eta));
    best.ratio_to_qsm = best.fpl / qsm;
    return best;
}

ContinuousOptimum optimize_network_continuous(int h_max, double hxi_min,
                                              double hxi_max) {
    if (h_max < 1) {
        throw std::domain_error("optimize_network_continuous: h_max must be >= 1");
    }
    static constexpr std::array<std::pair<double, double>, 8> kSeeds{{
        {0.2, 0.02},
        {0.2, 5.0},
        {0.5, 0.02},
        {0.5, 5.0},
        {0.9, 0.02},
        {0.9, 5.0},
        {0.99, 0.02},
        {0.99, 5.0},
    }};
    ContinuousOptimum best{0.0, 0, 0.0, -1.0};
    Candidate warm{0.5, std::min(5.0, hxi_max), -1.0};
    for (int h = 1; h <= h_max; ++h) {
        Candidate local{0.0, 0.0, -1.0};
        auto consider = [&](double g0, double x0, int sweeps) {
            const Candidate c =
                coordinate_descent(h, g0, x0, hxi_min, hxi_max, sweeps);
            if (c.ratio > local.ratio) local = c;
        };
        // Full multistart while module counts are cheap; afterwards the
        // optimum moves slowly with h and the warm start tracks it.
        if (h <= 64 || h % 128 == 0) {
            for (const auto& [g0, x0] : kSeeds) {
                consider(g0, std::min(x0, hxi_max), 8);
            }
        }
        consider(warm.gamma, warm.hxi, 4);
        warm = local;
        if (local.ratio > best.ratio) {
            best = {local.gamma, h, local.hxi, local.ratio};
        }
    }
    return best;
}

}  // namespace phasebound
