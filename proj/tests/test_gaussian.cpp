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
#include <numbers>
#include <random>
#include <stdexcept>

#include "analytic.hpp"
#include "doctest.h"
#include "scalar_search.hpp"
#include "specfun.hpp"

using namespace phasebound;

namespace {

constexpr double kPi = std::numbers::pi;

// Fisher information of a shifted/scaled normal by direct quadrature of
// the score, independent of the closed form under test.
double quadrature_fisher(double mu, double v, double dmu, double dv) {
    const double sigma = std::sqrt(v);
    const int n = 20000;  // Simpson rule needs even n
    const double lo = mu - 14.0 * sigma, hi = mu + 14.0 * sigma;
    const double h = (hi - lo) / n;
    auto integrand = [&](double x) {
        const double z = x - mu;
        const double p =
            std::exp(-z * z / (2.0 * v)) / std::sqrt(2.0 * kPi * v);
        const double score = z / v * dmu + (z * z / (2.0 * v * v) - 1.0 / (2.0 * v)) * dv;
        return score * score * p;
    };
    double sum = integrand(lo) + integrand(hi);
    for (int i = 1; i < n; ++i) {
        sum += integrand(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

}  // namespace

TEST_CASE("prepare") {
    const auto vac = prepare(GaussianSchemeParams(0.0, 0.0, 0.0));
    CHECK(vac.d[0] == 0.0);
    CHECK(vac.d[1] == 0.0);
    CHECK(vac.gamma[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(vac.gamma[1] == doctest::Approx(0.0));
    CHECK(vac.gamma[3] == doctest::Approx(0.25).epsilon(1e-15));

    const auto coh = prepare(GaussianSchemeParams(1.0, 0.0, 0.0));
    CHECK(coh.d[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(coh.d[1] == doctest::Approx(0.0));
    CHECK(coh.gamma[0] == doctest::Approx(0.25).epsilon(1e-15));

    // Quarter-turn rotation swaps the squeezed and anti-squeezed axes.
    const auto rot = prepare(GaussianSchemeParams(0.0, 1.0, kPi / 2.0));
    CHECK(rot.gamma[0] == doctest::Approx(std::exp(-2.0) / 4.0).epsilon(1e-13));
    CHECK(rot.gamma[3] == doctest::Approx(std::exp(2.0) / 4.0).epsilon(1e-13));
    CHECK(rot.gamma[1] == doctest::Approx(0.0).epsilon(1e-14));

    // Photon-number bookkeeping.
    const GaussianSchemeParams p(1.5, 0.8, 0.3);
    CHECK(p.n_total() ==
          doctest::Approx(1.5 * 1.5 + std::sinh(0.8) * std::sinh(0.8))
              .epsilon(1e-12));
}

TEST_CASE("apply_loss_phase") {
    const LossyPhase half(0.25, 0.0);
    const auto vac = prepare(GaussianSchemeParams(0.0, 0.0, 0.0));
    const auto vac_out = apply_loss_phase(vac, half);
    for (int i = 0; i < 4; ++i) {
        CHECK(vac_out.gamma[i] == doctest::Approx(vac.gamma[i]).epsilon(1e-15));
    }

    const auto coh = prepare(GaussianSchemeParams(1.0, 0.0, 0.0));
    const auto coh_out = apply_loss_phase(coh, half);
    CHECK(coh_out.d[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(coh_out.d[1] == doctest::Approx(0.0));
    CHECK(coh_out.gamma[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(coh_out.gamma[3] == doctest::Approx(0.25).epsilon(1e-15));

    const auto sq = prepare(GaussianSchemeParams(0.0, 1.0, 0.0));
    const auto sq_out = apply_loss_phase(sq, LossyPhase(0.5, 0.0));
    CHECK(sq_out.gamma[0] ==
          doctest::Approx((std::exp(2.0) * 0.5 + 0.5) / 4.0).epsilon(1e-13));
    CHECK(sq_out.gamma[3] ==
          doctest::Approx((std::exp(-2.0) * 0.5 + 0.5) / 4.0).epsilon(1e-13));

    // Loss keeps the state physical: det(gamma) >= 1/16.
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const GaussianSchemeParams p(3.0 * u(rng), 2.0 * u(rng),
                                     2.0 * kPi * u(rng));
        const LossyPhase lp(0.01 + 0.98 * u(rng), 2.0 * kPi * u(rng));
        const auto out = apply_loss_phase(prepare(p), lp);
        const double det =
            out.gamma[0] * out.gamma[3] - out.gamma[1] * out.gamma[2];
        CHECK(det >= 1.0 / 16.0 - 1e-12);
        CHECK(out.gamma[1] == doctest::Approx(out.gamma[2]).epsilon(1e-12));
    }
}

TEST_CASE("homodyne_fisher") {
    CHECK(homodyne_fisher(0.0, 1.0, 0.0, 0.0) == 0.0);
    CHECK(homodyne_fisher(0.0, 1.0, 2.0, 0.0) == doctest::Approx(4.0));
    CHECK(homodyne_fisher(0.3, 0.5, 1.0, 0.1) ==
          doctest::Approx(2.02).epsilon(1e-15));
    CHECK_THROWS_AS(homodyne_fisher(0.0, 0.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(homodyne_fisher(0.0, -1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("homodyne_fisher agrees with score quadrature") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double mu = 4.0 * u(rng) - 2.0;
        const double v = 0.05 + 2.0 * u(rng);
        const double dmu = 3.0 * u(rng) - 1.5;
        const double dv = u(rng) - 0.5;
        const double exact = homodyne_fisher(mu, v, dmu, dv);
        const double quad = quadrature_fisher(mu, v, dmu, dv);
        if (exact > 1e-12) {
            CHECK(std::abs(quad - exact) / exact <= 1e-6);
        }
    }
}

TEST_CASE("closed-form scheme fisher equals the moment pipeline") {
    CHECK(scheme_fisher(GaussianSchemeParams(1.0, 0.0, 0.0), 0.5) ==
          doctest::Approx(2.0).epsilon(1e-15));  // 4 alpha^2 eta at r = 0
    CHECK(scheme_fisher(GaussianSchemeParams(1.0, 1.0, 0.0), 0.5) ==
          doctest::Approx(3.5231883119115298).epsilon(1e-14));
    // eta -> 1 recovers the lossless value 4 alpha^2 e^{2r}.
    CHECK(scheme_fisher(GaussianSchemeParams(1.0, 1.0, 0.0), 1.0 - 1e-9) ==
          doctest::Approx(29.556224395722601).epsilon(1e-6));

    std::mt19937 rng(37);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double alpha = 0.1 + 3.0 * u(rng);
        const double r = 2.0 * u(rng);
        const double eta = 0.02 + 0.96 * u(rng);
        const double theta = 2.0 * kPi * u(rng) - kPi;
        const GaussianSchemeParams p(alpha, r, kPi / 2.0 - theta);
        const auto sig = homodyne_signal(p, LossyPhase(eta, theta));
        const double pipeline = homodyne_fisher(sig.mean, sig.variance,
                                                sig.dmean, sig.dvariance);
        const double closed =
            scheme_fisher(GaussianSchemeParams(alpha, r, 0.0), eta);
        CHECK(std::abs(pipeline - closed) / closed <= 1e-10);
        // The variance carries no phase information at the locked angle.
        CHECK(std::abs(sig.dvariance) <= 1e-10 * (1.0 + std::abs(sig.variance)));
    }
}

TEST_CASE("locked readout angle is stationary") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double alpha = 0.5 + 2.0 * u(rng);
        const double r = 1.5 * u(rng);
        const double eta = 0.1 + 0.8 * u(rng);
        const double theta = u(rng);
        const double varphi0 = kPi / 2.0 - theta;
        auto fisher_at = [&](double varphi) {
            const auto sig = homodyne_signal(GaussianSchemeParams(alpha, r, varphi),
                                             LossyPhase(eta, theta));
            return homodyne_fisher(sig.mean, sig.variance, sig.dmean,
                                   sig.dvariance);
        };
        const double f0 = fisher_at(varphi0);
        const double h = 1e-4;
        const double deriv = (fisher_at(varphi0 + h) - fisher_at(varphi0 - h)) /
                             (2.0 * h);
        CHECK(std::abs(deriv) <= 1e-6 * f0);
    }
}

TEST_CASE("fisher per lost photon in the bright limit") {
    // n_sq = 0 reduces to the coherent single-pass value.
    for (double eta : {0.1, 0.5, 0.9}) {
        CHECK(scheme_fpl_limit(0.0, eta) ==
              doctest::Approx(4.0 * eta / (1.0 - eta)).epsilon(1e-14));
    }
    // Large n_sq saturates the single-pass bound.
    for (double eta : {0.1, 0.5, 0.9}) {
        const double qsm = 4.0 * eta / ((1.0 - eta) * (1.0 - eta));
        CHECK(std::abs(scheme_fpl_limit(1e8, eta) - qsm) / qsm <= 1e-3);
    }
    CHECK(scheme_fpl_limit(1.0, 0.5) ==
          doctest::Approx(6.8284271247461903).epsilon(1e-14));

    // Never exceeds the bound, and grows monotonically with squeezing.
    for (double eta : {0.2, 0.6, 0.95}) {
        const double qsm = 4.0 * eta / ((1.0 - eta) * (1.0 - eta));
        double prev = 0.0;
        for (double n = 0.0; n <= 50.0; n += 0.5) {
            const double v = scheme_fpl_limit(n, eta);
            CHECK(v <= qsm * (1.0 + 1e-12));
            CHECK(v >= prev);
            prev = v;
        }
    }

    // Bright-limit consistency with the full scheme: F / lost photons at
    // fixed n_sq, alpha -> infinity.
    for (double eta : {0.3, 0.7}) {
        const double n_sq = 2.0;
        const double r = std::asinh(std::sqrt(n_sq));
        const double alpha = 3e4;
        const GaussianSchemeParams p(alpha, r, 0.0);
        const double lost = p.n_total() * (1.0 - eta);
        const double via_scheme = scheme_fisher(p, eta) / lost;
        CHECK(std::abs(via_scheme - scheme_fpl_limit(n_sq, eta)) /
                  scheme_fpl_limit(n_sq, eta) <=
              1e-6);
    }
}

TEST_CASE("required squeezing") {
    // Zero squeezing needed exactly at the optimal total transmissivity.
    const auto at_opt = required_squeezing_db(metrology_constants().gamma_opt);
    REQUIRE(at_opt.has_value());
    CHECK(at_opt->squeezing_db <= 1e-6);

    // Frozen value at eta = 0.5, verified by an independent bisection oracle.
    const auto half = required_squeezing_db(0.5);
    REQUIRE(half.has_value());
    CHECK(half->n_sq == doctest::Approx(0.13771525020855303).epsilon(1e-9));
    CHECK(half->squeezing_db ==
          doctest::Approx(3.1535914688735142).epsilon(1e-9));
    {
        const double lg = std::log(0.5);
        const double target = 4.0 * metrology_constants().cl_const / (lg * lg);
        double lo = 0.0, hi = 1e6;
        while (hi - lo > 1e-12) {
            const double mid = 0.5 * (lo + hi);
            (scheme_fpl_limit(mid, 0.5) < target ? lo : hi) = mid;
        }
        CHECK(half->n_sq == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-8));
    }

    // Round trip: plugging the solution back reproduces the target.
    for (double eta : {0.15, 0.3, 0.5, 0.7, 0.9}) {
        const auto sq = required_squeezing_db(eta);
        REQUIRE(sq.has_value());
        const double lg = std::log(eta);
        const double target = 4.0 * metrology_constants().cl_const / (lg * lg);
        CHECK(std::abs(scheme_fpl_limit(sq->n_sq, eta) - target) / target <=
              1e-9);
        CHECK(sq->squeezing_db ==
              doctest::Approx(20.0 * std::asinh(std::sqrt(sq->n_sq)) /
                              std::log(10.0))
                  .epsilon(1e-12));
    }

    // For small eta the classical optimum outruns the single-pass bound and
    // no amount of squeezing reaches it.
    CHECK_FALSE(required_squeezing_db(0.05).has_value());
    CHECK(required_squeezing_db(0.12).has_value());
}

TEST_CASE("optimal squeezing split at fixed photon number") {
    // Closed form against a golden-section oracle on the explicit objective.
    for (double eta : {0.3, 0.5, 0.8}) {
        for (double n : {0.5, 10.0, 100.0}) {
            const auto opt = optimal_nsq_fixed_n(eta, n);
            auto objective = [&](double nsq) {
                return 4.0 * eta * (n - nsq) /
                       (2.0 * eta * nsq -
                        2.0 * eta * std::sqrt(nsq * (nsq + 1.0)) + 1.0);
            };
            const auto oracle = golden_section_max(objective, 0.0, n, 1e-13);
            CHECK(std::abs(opt.n_sq - oracle.x) <= 1e-8 * (1.0 + oracle.x));
            CHECK(std::abs(opt.fisher - oracle.value) / oracle.value <= 1e-8);
            // Beats the pure-coherent split.
            CHECK(opt.fisher >= 4.0 * eta * n * (1.0 - 1e-12));
        }
    }

    const auto frozen = optimal_nsq_fixed_n(0.5, 10.0);
    CHECK(frozen.n_sq == doctest::Approx(0.95269175320508829).epsilon(1e-12));
    CHECK(frozen.fisher == doctest::Approx(30.733500838578401).epsilon(1e-12));

    // Tiny photon budgets put almost nothing into squeezing.
    const auto tiny = optimal_nsq_fixed_n(0.5, 1e-6);
    CHECK(tiny.n_sq <= 1e-9);
    CHECK(tiny.fisher == doctest::Approx(4.0 * 0.5 * 1e-6).epsilon(1e-4));
}
