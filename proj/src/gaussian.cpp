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

#include "gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "analytic.hpp"
#include "scalar_search.hpp"
#include "specfun.hpp"

namespace phasebound {

namespace {

struct Mat2 {
    double a, b, c, d;  // [[a, b], [c, d]]
};

Mat2 rotation(double phi) {
    const double cs = std::cos(phi), sn = std::sin(phi);
    return {cs, -sn, sn, cs};
}

// Derivative of the rotation matrix: R'(phi) = R(phi + pi/2).
Mat2 rotation_deriv(double phi) {
    const double cs = std::cos(phi), sn = std::sin(phi);
    return {-sn, -cs, cs, -sn};
}

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 transpose(const Mat2& x) { return {x.a, x.c, x.b, x.d}; }

std::array<double, 2> mul_vec(const Mat2& m, const std::array<double, 2>& v) {
    return {m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]};
}

Mat2 to_mat(const std::array<double, 4>& g) { return {g[0], g[1], g[2], g[3]}; }

std::array<double, 4> to_array(const Mat2& m) { return {m.a, m.b, m.c, m.d}; }

}  // namespace

GaussianSchemeParams::GaussianSchemeParams(double alpha, double r, double varphi)
    : alpha(alpha), r(r), varphi(varphi) {
    if (!(alpha >= 0.0) || !(r >= 0.0)) {
        throw std::domain_error(
            "GaussianSchemeParams: alpha and r must be >= 0");
    }
}

double GaussianSchemeParams::n_squeezing() const {
    const double s = std::sinh(r);
    return s * s;
}

double GaussianSchemeParams::n_total() const {
    return alpha * alpha + n_squeezing();
}

GaussianState prepare(const GaussianSchemeParams& params) {
    const Mat2 rot = rotation(params.varphi);
    const Mat2 core = {std::exp(2.0 * params.r) / 4.0, 0.0, 0.0,
                       std::exp(-2.0 * params.r) / 4.0};
    GaussianState st;
    st.d = mul_vec(rot, {params.alpha, 0.0});
    st.gamma = to_array(mul(mul(rot, core), transpose(rot)));
    return st;
}

GaussianState apply_loss_phase(const GaussianState& state, const LossyPhase& lp) {
    const double eta = lp.eta();
    const Mat2 rot = rotation(lp.theta());
    GaussianState out;
    const auto rd = mul_vec(rot, state.d);
    out.d = {std::sqrt(eta) * rd[0], std::sqrt(eta) * rd[1]};
    Mat2 g = mul(mul(rot, to_mat(state.gamma)), transpose(rot));
    const double vac = (1.0 - eta) / 4.0;
    out.gamma = {eta * g.a + vac, eta * g.b, eta * g.c, eta * g.d + vac};
    return out;
}

double homodyne_fisher(double /*mean*/, double variance, double dmean,
                       double dvariance) {
    if (!(variance > 0.0)) {
        throw std::domain_error("homodyne_fisher: variance must be > 0");
    }
    return dmean * dmean / variance +
           dvariance * dvariance / (2.0 * variance * variance);
}

HomodyneSignal homodyne_signal(const GaussianSchemeParams& params,
                               const LossyPhase& lp) {
    const GaussianState out = apply_loss_phase(prepare(params), lp);

    // theta enters only through the output rotation R(theta); differentiate
    // the transported input moments with R'(theta).
    const GaussianState in = prepare(params);
    const double eta = lp.eta();
    const Mat2 rot = rotation(lp.theta());
    const Mat2 drot = rotation_deriv(lp.theta());

    const auto dd = mul_vec(drot, in.d);
    const Mat2 g_in = to_mat(in.gamma);
    const Mat2 dg =
        mul(mul(drot, g_in), transpose(rot));  // R' Gamma R^T
    const Mat2 dg_sym = mul(mul(rot, g_in), transpose(drot));  // R Gamma R'^T

    HomodyneSignal sig;
    sig.mean = out.d[0];
    sig.variance = out.gamma[0];
    sig.dmean = std::sqrt(eta) * dd[0];
    sig.dvariance = eta * (dg.a + dg_sym.a);
    return sig;
}

double scheme_fisher(const GaussianSchemeParams& params, double eta) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::domain_error("scheme_fisher: eta must lie in (0, 1)");
    }
    const double a2 = params.alpha * params.alpha;
    return 4.0 * a2 * eta / (1.0 + (std::exp(-2.0 * params.r) - 1.0) * eta);
}

double scheme_fpl_limit(double n_sq, double eta) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::domain_error("scheme_fpl_limit: eta must lie in (0, 1)");
    }
    if (!(n_sq >= 0.0)) {
        throw std::domain_error("scheme_fpl_limit: n_sq must be >= 0");
    }
    const double denom =
        2.0 * eta * n_sq - 2.0 * eta * std::sqrt(n_sq * (n_sq + 1.0)) + 1.0;
    const double one_m = 1.0 - eta;
    return (one_m / denom) * 4.0 * eta / (one_m * one_m);
}

std::optional<RequiredSqueezing> required_squeezing_db(double eta) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::domain_error("required_squeezing_db: eta must lie in (0, 1)");
    }
    const double lg = std::log(eta);
    const double target =
        4.0 * metrology_constants().cl_const / (lg * lg);  // SM classical optimum

    constexpr double kNsqMax = 1e8;
    // scheme_fpl_limit is increasing in n_sq toward the single-pass bound;
    // no solution when the target sits above everything reachable.
    if (target <= scheme_fpl_limit(0.0, eta)) {
        return RequiredSqueezing{0.0, 0.0, 0.0};
    }
    if (target > scheme_fpl_limit(kNsqMax, eta)) {
        return std::nullopt;
    }
    double lo = 0.0, hi = kNsqMax;
    for (int i = 0; i < 200 && (hi - lo) > 1e-12 * (1.0 + hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (scheme_fpl_limit(mid, eta) < target ? lo : hi) = mid;
    }
    RequiredSqueezing out;
    out.n_sq = 0.5 * (lo + hi);
    out.r = std::asinh(std::sqrt(out.n_sq));
    out.squeezing_db = 20.0 * out.r / std::log(10.0);
    return out;
}

NsqOptimum optimal_nsq_fixed_n(double eta, double n) {
    if (!(eta > 0.0 && eta < 1.0)) {
        throw std::domain_error("optimal_nsq_fixed_n: eta must lie in (0, 1)");
    }
    if (!(n > 0.0)) {
        throw std::domain_error("optimal_nsq_fixed_n: n must be > 0");
    }
    const double s = std::sqrt(1.0 + 4.0 * n * (1.0 - eta) * eta);
    NsqOptimum out;
    out.n_sq = (s - 1.0) * (s - 1.0) / (4.0 * (1.0 - eta) * (s - eta));
    out.fisher = 2.0 * eta * (1.0 + 2.0 * n * (1.0 - eta) - s) /
                 ((1.0 - eta) * (1.0 - eta));
    return out;
}

}  // namespace phasebound
