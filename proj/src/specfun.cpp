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

#include "specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace phasebound {

namespace {

constexpr double kBranchPoint = -0.36787944117144233;  // -1/e
constexpr double kBranchSlack = 1e-15;

double initial_guess(double x) {
    // Series in p = sqrt(2 (e x + 1)) about the branch point; accurate where
    // e x + 1 is small, and a usable seed everywhere below the threshold.
    const double q = std::exp(1.0) * x + 1.0;
    if (q < 0.5) {
        const double p = std::sqrt(2.0 * std::max(q, 0.0));
        return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    }
    if (x > 3.0) {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        return l1 - l2 + l2 / l1;
    }
    return std::log1p(x);
}

}  // namespace

double lambert_w0(double x) {
    if (!(x >= kBranchPoint - kBranchSlack)) {
        throw std::domain_error("lambert_w0: argument below -1/e");
    }
    if (x < kBranchPoint) x = kBranchPoint;
    if (x == 0.0) return 0.0;

    double w = initial_guess(x);
    for (int i = 0; i < 64; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        if (f == 0.0) break;
        // Halley step: f' = e^w (w+1), f'' = e^w (w+2).
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-14 * (1.0 + std::abs(w))) break;
    }
    return std::max(w, -1.0);
}

const MetrologyConstants& metrology_constants() {
    static const MetrologyConstants c = [] {
        MetrologyConstants m;
        m.w = lambert_w0(-2.0 / std::exp(2.0));
        m.k_coeff = 2.0 + m.w;
        m.gamma_opt = std::exp(-m.k_coeff);
        m.cl_const = -m.w * m.k_coeff;
        m.advantage_ratio = std::sqrt(m.cl_const);
        return m;
    }();
    return c;
}

}  // namespace phasebound
