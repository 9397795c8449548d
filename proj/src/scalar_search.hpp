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

#ifndef PHASEBOUND_SCALAR_SEARCH_HPP
#define PHASEBOUND_SCALAR_SEARCH_HPP

#include <cmath>
#include <utility>

namespace phasebound {

struct ScalarMaximum {
    double x;
    double value;
};

/// Golden-section maximization on [a, b]. Assumes a single local maximum
/// inside the bracket; converges to the better endpoint otherwise.
template <class F>
ScalarMaximum golden_section_max(F&& f, double a, double b,
                                 double tol = 1e-10, int max_iter = 200) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > tol * (1.0 + std::abs(a) + std::abs(b)); ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

/// Uniform pre-scan of n points followed by golden-section refinement in the
/// bracket around the best sample. Deterministic and robust to the gentle
/// multimodality of the interference objectives optimized here.
template <class F>
ScalarMaximum scan_then_golden(F&& f, double a, double b, int n = 32,
                               double tol = 1e-10) {
    if (!(b > a)) return {a, f(a)};
    const double step = (b - a) / (n - 1);
    int best = 0;
    double best_val = f(a);
    for (int i = 1; i < n; ++i) {
        const double v = f(a + i * step);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    const double lo = a + (best > 0 ? (best - 1) : 0) * step;
    const double hi = a + (best < n - 1 ? (best + 1) : n - 1) * step;
    ScalarMaximum refined = golden_section_max(f, lo, hi, tol);
    if (refined.value >= best_val) return refined;
    return {a + best * step, best_val};
}

/// Bisection for the largest x in [lo, hi] with pred(x) true, given
/// pred(lo) = true and pred(hi) = false. Interval width shrinks below tol.
template <class P>
double bisect_boundary(P&& pred, double lo, double hi, double tol,
                       int max_iter = 200) {
    for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace phasebound

#endif
