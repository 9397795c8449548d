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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "specfun.hpp"

using namespace phasebound;

namespace {

// Brute-force maximizer of the classical objective over a fine k grid;
// independent of classical_kopt.
double scan_kopt(double eta) {
    double best_k = 1e-3, best_v = 0.0;
    for (double k = 1e-3; k <= 60.0; k += 1e-3) {
        const double v = classical_fpl(eta, k, Mode::TM);
        if (v > best_v) {
            best_v = v;
            best_k = k;
        }
    }
    return best_k;
}

}  // namespace

TEST_CASE("classical multi-pass fisher per lost photon") {
    CHECK(classical_fpl(0.5, 1.0, Mode::TM) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(classical_fpl(0.5, 1.0, Mode::SM) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(classical_fpl(0.5, 2.0, Mode::TM) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("optimal pass count vs brute-force scan") {
    CHECK(classical_kopt(0.20318786997997995) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(classical_kopt(0.5) == doctest::Approx(2.2991138170001097).epsilon(1e-13));
    CHECK(classical_kopt(0.9) == doctest::Approx(15.125440968944839).epsilon(1e-13));
    for (double eta : {0.3, 0.5, 0.7}) {
        CHECK(classical_kopt(eta) == doctest::Approx(scan_kopt(eta)).epsilon(2e-3));
    }
}

TEST_CASE("classical objective is unimodal in k") {
    for (double eta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        int sign_changes = 0;
        double prev = classical_fpl(eta, 0.01, Mode::TM);
        bool rising = true;
        for (double k = 0.02; k <= 80.0; k += 0.02) {
            const double v = classical_fpl(eta, k, Mode::TM);
            if (rising && v < prev) {
                rising = false;
                ++sign_changes;
            } else if (!rising && v > prev) {
                ++sign_changes;
            }
            prev = v;
        }
        CHECK(sign_changes == 1);
    }
}

TEST_CASE("optimal classical evaluation, continuous and discrete") {
    const auto cont = classical_fpl_opt(0.5, Mode::TM, false);
    CHECK(cont.fisher_per_lost ==
          doctest::Approx(1.3479158609298941).epsilon(1e-13));
    CHECK(*cont.k == doctest::Approx(2.2991138170001097).epsilon(1e-13));
    // Fine k scan never beats the closed-form optimum.
    for (double k = 0.01; k < 40.0; k += 0.01) {
        CHECK(classical_fpl(0.5, k, Mode::TM) <=
              cont.fisher_per_lost * (1.0 + 1e-12));
    }

    const auto cont_sm = classical_fpl_opt(0.5, Mode::SM, false);
    CHECK(cont_sm.fisher_per_lost ==
          doctest::Approx(5.3916634437195763).epsilon(1e-13));

    // Discrete optimum at the special transmissivity is a single pass.
    const double gamma_opt = metrology_constants().gamma_opt;
    const auto disc = classical_fpl_opt(gamma_opt, Mode::TM, true);
    CHECK(*disc.k == 1.0);
    CHECK(disc.fisher_per_lost ==
          doctest::Approx(classical_fpl(gamma_opt, 1.0, Mode::TM)).epsilon(1e-15));

    // Discrete never beats continuous, and floor/ceil bracketing matches a
    // full integer scan.
    for (double eta : {0.15, 0.4, 0.6, 0.85, 0.97}) {
        const auto d = classical_fpl_opt(eta, Mode::TM, true);
        const auto cc = classical_fpl_opt(eta, Mode::TM, false);
        CHECK(d.fisher_per_lost <= cc.fisher_per_lost * (1.0 + 1e-12));
        double best = 0.0;
        for (int k = 1; k <= 400; ++k) {
            best = std::max(best, classical_fpl(eta, k, Mode::TM));
        }
        CHECK(d.fisher_per_lost == doctest::Approx(best).epsilon(1e-13));
    }
}

TEST_CASE("quantum bounds") {
    CHECK(quantum_bound_fpl(0.5, 1.0, Mode::TM) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(quantum_bound_fpl(0.5, 1.0, Mode::SM) ==
          doctest::Approx(8.0).epsilon(1e-15));
    CHECK(quantum_bound_fpl(0.5, 2.0, Mode::TM) ==
          doctest::Approx(4.0 * 0.25 / 0.5625).epsilon(1e-15));

    const double inv_e = 1.0 / std::exp(1.0);
    CHECK(quantum_bound_limit(inv_e, Mode::TM) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quantum_bound_limit(inv_e, Mode::SM) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(quantum_bound_limit(0.5, Mode::TM) ==
          doctest::Approx(2.0813689810056078).epsilon(1e-13));

    // The k -> 0 limit is approached from below.
    double prev = 0.0;
    for (double k : {1.0, 0.1, 0.01, 1e-3, 1e-4}) {
        const double v = quantum_bound_fpl(0.5, k, Mode::TM);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev == doctest::Approx(2.0813689810056078).epsilon(1e-3));

    // Bound dominates the classical value at matched settings.
    for (double eta : {0.1, 0.5, 0.9}) {
        for (double k : {0.5, 1.0, 3.0, 10.0}) {
            CHECK(quantum_bound_fpl(eta, k, Mode::TM) >=
                  classical_fpl(eta, k, Mode::TM));
        }
    }

    // Integer-pass bound peaks at a single pass.
    for (double eta = 0.02; eta < 1.0; eta += 0.02) {
        const double q1 = quantum_bound_fpl(eta, 1.0, Mode::TM);
        for (int k = 2; k <= 40; ++k) {
            CHECK(quantum_bound_fpl(eta, k, Mode::TM) < q1);
        }
    }
}

TEST_CASE("SM is exactly four times TM") {
    for (double eta : {0.12, 0.5, 0.88}) {
        for (double k : {0.3, 1.0, 4.2}) {
            CHECK(classical_fpl(eta, k, Mode::SM) ==
                  doctest::Approx(4.0 * classical_fpl(eta, k, Mode::TM))
                      .epsilon(1e-15));
            CHECK(quantum_bound_fpl(eta, k, Mode::SM) ==
                  doctest::Approx(4.0 * quantum_bound_fpl(eta, k, Mode::TM))
                      .epsilon(1e-15));
        }
        CHECK(quantum_bound_limit(eta, Mode::SM) ==
              doctest::Approx(4.0 * quantum_bound_limit(eta, Mode::TM))
                  .epsilon(1e-15));
    }
}

TEST_CASE("reparameterization: ln^2(eta) F' depends only on the total loss") {
    // Fix gamma = eta^k and vary eta; the rescaled objective is invariant.
    const double gamma = 0.3;
    const double ref = std::log(0.5) * std::log(0.5) *
                       classical_fpl(0.5, std::log(gamma) / std::log(0.5),
                                     Mode::TM);
    for (double eta = 0.05; eta < 0.96; eta += 0.05) {
        const double k = std::log(gamma) / std::log(eta);
        const double v =
            std::log(eta) * std::log(eta) * classical_fpl(eta, k, Mode::TM);
        CHECK(v == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("advantage ratio") {
    // Continuous passes: a universal constant.
    for (double eta : {0.1, 0.45, 0.9}) {
        CHECK(advantage_ratio(eta, false) ==
              doctest::Approx(0.80474234254941181).epsilon(1e-13));
    }

    const double gamma_opt = metrology_constants().gamma_opt;
    CHECK(advantage_ratio(gamma_opt, true) ==
          doctest::Approx(0.80474234254941181).epsilon(1e-12));

    const double at_half = advantage_ratio(0.5, true);
    CHECK(at_half == doctest::Approx(0.80037742256862912).epsilon(1e-13));
    CHECK(at_half > 0.78);
    CHECK(at_half <= 0.805);
    CHECK(1.0 - at_half < 0.20);

    CHECK(advantage_ratio(0.5, true, QuantumNorm::DiscreteBest) ==
          doctest::Approx(0.81649658092772603).epsilon(1e-13));

    // Against the integer-pass quantum bound the reduction stays below 20%
    // across the whole range.
    for (double eta = 0.02; eta < 1.0; eta += 0.01) {
        const double r = advantage_ratio(eta, true, QuantumNorm::DiscreteBest);
        CHECK(1.0 - r < 0.20);
    }
}

TEST_CASE("fig2a scan") {
    const std::vector<double> grid{0.5, 0.2, 0.8};
    const auto rows = fig2a_scan(grid, kScanAllAnalytic, Mode::TM);
    REQUIRE(rows.size() == 9);
    // Sorted by eta; three strategies each.
    CHECK(rows[0].eta == 0.2);
    CHECK(rows[3].eta == 0.5);
    CHECK(rows[6].eta == 0.8);

    for (const auto& r : rows) {
        CHECK(r.fisher_per_lost > 0.0);
        CHECK(r.normalized_precision > 0.0);
        CHECK(r.normalized_precision <= 1.0 + 1e-12);
    }

    // Frozen spot values at eta = 0.5.
    const auto& cd = rows[3];
    REQUIRE(cd.strategy == kScanClassicalDiscrete);
    CHECK(cd.k == 2.0);
    const auto& cc = rows[4];
    REQUIRE(cc.strategy == kScanClassicalContinuous);
    CHECK(cc.normalized_precision ==
          doctest::Approx(0.80474234254941181).epsilon(1e-13));
    const auto& qd = rows[5];
    REQUIRE(qd.strategy == kScanQuantumDiscrete);
    CHECK(qd.k == 1.0);
    CHECK(qd.normalized_precision ==
          doctest::Approx(0.98025814346854719).epsilon(1e-13));

    // Mode choice does not move the normalized precision.
    const auto sm_rows = fig2a_scan(grid, kScanAllAnalytic, Mode::SM);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(sm_rows[i].normalized_precision ==
              doctest::Approx(rows[i].normalized_precision).epsilon(1e-14));
        CHECK(sm_rows[i].fisher_per_lost ==
              doctest::Approx(4.0 * rows[i].fisher_per_lost).epsilon(1e-14));
    }
}
