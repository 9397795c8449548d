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

#ifndef PHASEBOUND_SPECFUN_HPP
#define PHASEBOUND_SPECFUN_HPP

namespace phasebound {

/// Universal constants of the lost-photon-optimal multi-pass strategy.
///
/// All five values derive from the principal Lambert W branch evaluated at
/// -2/e^2, which governs where the per-lost-photon Fisher information of a
/// coherent multi-pass probe peaks as a function of the total transmissivity.
struct MetrologyConstants {
    double w;                // W0(-2/e^2), solves w e^w = -2/e^2
    double k_coeff;          // 2 + w; optimal pass count is k_coeff / ln(1/eta)
    double gamma_opt;        // exp(-(2 + w)), optimal total transmissivity
    double cl_const;         // -w (2 + w), peak of the classical objective times ln^2(eta)
    double advantage_ratio;  // sqrt(cl_const), classical-to-quantum RMSE ratio
};

/// Principal branch of the Lambert W function, w e^w = x for x >= -1/e.
///
/// Halley iteration seeded with a branch-point series near -1/e and a
/// log-asymptotic form for large arguments. Residual |w e^w - x| stays below
/// 1e-12 * max(1, |x|) across the domain. Arguments below -1/e (beyond a
/// 1e-15 slack) raise std::domain_error.
double lambert_w0(double x);

/// The cached constant set. Thread-safe; computed once.
const MetrologyConstants& metrology_constants();

}  // namespace phasebound

#endif
