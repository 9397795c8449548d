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

#ifndef PHASEBOUND_GAUSSIAN_HPP
#define PHASEBOUND_GAUSSIAN_HPP

#include <array>
#include <optional>

#include "channels.hpp"

namespace phasebound {

/// Single-mode Gaussian state as quadrature means plus covariances.
/// Convention: vacuum covariance is I/4 (quadratures x1 = (a^dag + a)/2,
/// x2 = i(a^dag - a)/2).
struct GaussianState {
    std::array<double, 2> d;      // quadrature means
    std::array<double, 4> gamma;  // row-major symmetric 2x2 covariance
};

/// Phase-squeezed coherent probe: displacement alpha along the anti-squeezed
/// axis, squeezing parameter r, rotated by varphi. The squeezed quadrature
/// is the one orthogonal to the displacement (phase quadrature).
struct GaussianSchemeParams {
    double alpha;
    double r;
    double varphi;

    GaussianSchemeParams(double alpha, double r, double varphi);

    double n_squeezing() const;  // sinh^2(r)
    double n_total() const;      // alpha^2 + sinh^2(r)
};

/// d = R(varphi) (alpha, 0)^T, Gamma = R(varphi) diag(e^{2r}, e^{-2r})/4 R^T.
GaussianState prepare(const GaussianSchemeParams& params);

/// Moment action of the lossy phase: d -> sqrt(eta) R(theta) d,
/// Gamma -> eta R(theta) Gamma R^T(theta) + (1-eta)/4 I.
GaussianState apply_loss_phase(const GaussianState& state, const LossyPhase& lp);

/// Fisher information about the encoded parameter carried by a normal
/// outcome of mean mu and variance v: dmu^2/v + dv^2/(2 v^2).
double homodyne_fisher(double mean, double variance, double dmean,
                       double dvariance);

struct HomodyneSignal {
    double mean;
    double variance;
    double dmean;      // d(mean)/d(theta)
    double dvariance;  // d(variance)/d(theta)
};

/// x1-quadrature statistics after the lossy phase, with exact analytic
/// theta-derivatives obtained by differentiating the output rotation.
HomodyneSignal homodyne_signal(const GaussianSchemeParams& params,
                               const LossyPhase& lp);

/// Closed-form Fisher information of the homodyne readout with the rotation
/// locked to varphi = pi/2 - theta: 4 alpha^2 eta / [1 + (e^{-2r} - 1) eta].
/// Equals homodyne_fisher applied to homodyne_signal at that angle, where
/// the variance-derivative term vanishes.
double scheme_fisher(const GaussianSchemeParams& params, double eta);

/// Large-intensity limit of the Fisher information per lost photon at fixed
/// squeezing photon number n_sq. Interpolates between the coherent value
/// 4 eta/(1-eta) at n_sq = 0 and the single-pass bound 4 eta/(1-eta)^2.
double scheme_fpl_limit(double n_sq, double eta);

struct RequiredSqueezing {
    double n_sq;
    double r;
    double squeezing_db;  // 20 r / ln(10)
};

/// Squeezing needed for the homodyne scheme to match the optimal classical
/// multi-pass Fisher information per lost photon. Solved by bisection on
/// n_sq over [0, 1e8]; absent when the classical optimum exceeds what any
/// squeezing can reach (small eta).
std::optional<RequiredSqueezing> required_squeezing_db(double eta);

struct NsqOptimum {
    double n_sq;
    double fisher;
};

/// Best split of a fixed mean photon number n between displacement and
/// squeezing, with the resulting Fisher information (closed form).
NsqOptimum optimal_nsq_fixed_n(double eta, double n);

}  // namespace phasebound

#endif
