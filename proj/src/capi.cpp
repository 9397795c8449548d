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

#include "phasebound.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "analytic.hpp"
#include "channels.hpp"
#include "gaussian.hpp"
#include "imperfect.hpp"
#include "network.hpp"
#include "reference_data.hpp"
#include "reproduce.hpp"
#include "specfun.hpp"

namespace {

thread_local std::string g_last_error;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

template <class F>
pb_status guarded(F&& body) {
    try {
        body();
        return PB_OK;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return PB_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PB_ERR_DOMAIN;
    }
}

// The one exception carrying a genuinely numerical (not argument) failure.
bool is_degenerate_message(const char* msg) {
    return std::strstr(msg, "no photons lost") != nullptr;
}

pb_status classify(const std::domain_error& e) {
    g_last_error = e.what();
    return is_degenerate_message(e.what()) ? PB_ERR_DOMAIN : PB_ERR_INVALID;
}

phasebound::Mode to_mode(pb_mode m) {
    return m == PB_MODE_SM ? phasebound::Mode::SM : phasebound::Mode::TM;
}

}  // namespace

struct pb_table {
    std::vector<std::string> col_names;
    std::vector<std::string> row_labels;  // empty when unlabelled
    std::vector<double> data;             // row-major
    size_t cols = 0;

    size_t rows() const { return cols ? data.size() / cols : 0; }
};

namespace {

pb_table* report_to_table(const phasebound::Report& rep) {
    auto* t = new pb_table;
    t->col_names = {"actual", "lo", "hi", "pass"};
    t->cols = 4;
    for (const auto& row : rep.rows) {
        t->row_labels.push_back(row.name);
        t->data.push_back(row.actual);
        t->data.push_back(row.lo);
        t->data.push_back(row.hi);
        t->data.push_back(row.pass ? 1.0 : 0.0);
    }
    return t;
}

}  // namespace

extern "C" {

const char* pb_status_message(pb_status status) {
    switch (status) {
        case PB_OK: return "ok";
        case PB_ERR_INVALID: return "invalid argument";
        case PB_ERR_DOMAIN: return "numerical domain error";
        case PB_ERR_NULL: return "null pointer argument";
        default: return "unknown status";
    }
}

const char* pb_last_error(void) { return g_last_error.c_str(); }

pb_status pb_lambert_w0(double x, double* w) {
    if (!w) return PB_ERR_NULL;
    try {
        *w = phasebound::lambert_w0(x);
        return PB_OK;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return PB_ERR_DOMAIN;
    }
}

pb_status pb_metrology_constants(pb_constants* out) {
    if (!out) return PB_ERR_NULL;
    const auto& c = phasebound::metrology_constants();
    out->w = c.w;
    out->k_coeff = c.k_coeff;
    out->gamma_opt = c.gamma_opt;
    out->cl_const = c.cl_const;
    out->advantage_ratio = c.advantage_ratio;
    return PB_OK;
}

pb_status pb_compose(double eta, double theta, double k, double* eta_out,
                     double* theta_out) {
    if (!eta_out || !theta_out) return PB_ERR_NULL;
    return guarded([&] {
        const auto lp = phasebound::compose(phasebound::LossyPhase(eta, theta),
                                            phasebound::PassCount::continuous(k));
        *eta_out = lp.eta();
        *theta_out = lp.theta();
    });
}

pb_status pb_lost_photons(double eta, double k, double n_in, double* lost) {
    if (!lost) return PB_ERR_NULL;
    return guarded([&] {
        *lost = phasebound::lost_photons(phasebound::LossyPhase(eta, 0.0),
                                         phasebound::PassCount::continuous(k),
                                         n_in);
    });
}

pb_status pb_incident_photons(double eta, double k, double n_in,
                              double* incident) {
    if (!incident) return PB_ERR_NULL;
    return guarded([&] {
        *incident = phasebound::incident_photons(
            phasebound::LossyPhase(eta, 0.0),
            phasebound::PassCount::continuous(k), n_in);
    });
}

pb_status pb_classical_incident_photons(double eta, int n_passes, double n_in,
                                        double* out) {
    if (!out) return PB_ERR_NULL;
    return guarded([&] {
        *out = phasebound::classical_incident_photons(eta, n_passes, n_in);
    });
}

pb_status pb_noon_comparison(double eta, int n, pb_noon_comparison* out) {
    if (!out) return PB_ERR_NULL;
    return guarded([&] {
        const auto r = phasebound::noon_comparison(eta, n);
        out->noon_incident = r.noon_incident;
        out->classical_incident = r.classical_incident;
        out->classical_fewer = r.classical_fewer ? 1 : 0;
    });
}

pb_status pb_classical_fpl(double eta, double k, pb_mode mode, double* out) {
    if (!out) return PB_ERR_NULL;
    return guarded(
        [&] { *out = phasebound::classical_fpl(eta, k, to_mode(mode)); });
}

pb_status pb_classical_kopt(double eta, double* out) {
    if (!out) return PB_ERR_NULL;
    return guarded([&] { *out = phasebound::classical_kopt(eta); });
}

pb_status pb_classical_fpl_opt(double eta, pb_mode mode, int discrete,
                               double* fpl, double* k_out) {
    if (!fpl) return PB_ERR_NULL;
    return guarded([&] {
        const auto ev =
            phasebound::classical_fpl_opt(eta, to_mode(mode), discrete != 0);
        *fpl = ev.fisher_per_lost;
        if (k_out) *k_out = ev.k.value_or(kNan);
    });
}

pb_status pb_quantum_bound_fpl(double eta, double k, pb_mode mode,
                               double* out) {
    if (!out) return PB_ERR_NULL;
    return guarded(
        [&] { *out = phasebound::quantum_bound_fpl(eta, k, to_mode(mode)); });
}

pb_status pb_quantum_bound_limit(double eta, pb_mode mode, double* out) {
    if (!out) return PB_ERR_NULL;
    return guarded(
        [&] { *out = phasebound::quantum_bound_limit(eta, to_mode(mode)); });
}

pb_status pb_advantage_ratio(double eta, int discrete, pb_quantum_norm norm,
                             double* out) {
    if (!out) return PB_ERR_NULL;
    return guarded([&] {
        *out = phasebound::advantage_ratio(
            eta, discrete != 0,
            norm == PB_NORM_DISCRETE_BEST
                ? phasebound::QuantumNorm::DiscreteBest
                : phasebound::QuantumNorm::ContinuousLimit);
    });
}

pb_status pb_gaussian_prepare(double alpha, double r, double varphi,
                              pb_gaussian_state* out) {
    if (!out) return PB_ERR_NULL;
    return guarded([&] {
        const auto st =
            phasebound::prepare(phasebound::GaussianSchemeParams(alpha, r, varphi));
        out->d[0] = st.d[0];
        out->d[1] = st.d[1];
        for (int i = 0; i < 4; ++i) out->gamma[i] = st.gamma[i];
    });
}

pb_status pb_gaussian_apply_loss_phase(const pb_gaussian_state* in, double eta,
                                       double theta, pb_gaussian_state* out) {
    if (!in || !out) return PB_ERR_NULL;
    return guarded([&] {
        phasebound::GaussianState st;
        st.d = {in->d[0], in->d[1]};
        st.gamma = {in->gamma[0], in->gamma[1], in->gamma[2], in->gamma[3]};
        const auto res = phasebound::apply_loss_phase(
            st, phasebound::LossyPhase(eta, theta));
        out->d[0] = res.d[0];
        out->d[1] = res.d[1];
        for (int i = 0; i < 4; ++i) out->gamma[i] = res.gamma[i];
    });
}

pb_status pb_homodyne_fisher(double mean, double variance, double dmean,
                             double dvariance, double* out) {
    if (!out) return PB_ERR_NULL;
    try {
        *out = phasebound::homodyne_fisher(mean, variance, dmean, dvariance);
        return PB_OK;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return PB_ERR_DOMAIN;
    }
}

pb_status pb_gaussian_homodyne_signal(double alpha, double r, double varphi,
                                      double eta, double theta,
                                      pb_homodyne_signal* out) {
    if (!out) return PB_ERR_NULL;
    return guarded([&] {
        const auto sig = phasebound::homodyne_signal(
            phasebound::GaussianSchemeParams(alpha, r, varphi),
            phasebound::LossyPhase(eta, theta));
        out->mean = sig.mean;
        out->variance = sig.variance;
        out->dmean = sig.dmean;
        out->dvariance = sig.dvariance;
    });
}

pb_status pb_gaussian_scheme_fisher(double alpha, double r, double eta,
                                    double* out) {
    if (!out) return PB_ERR_NULL;
    return guarded([&] {
        *out = phasebound::scheme_fisher(
            phasebound::GaussianSchemeParams(alpha, r, 0.0), eta);
    });
}

pb_status pb_gaussian_fpl_limit(double n_sq, double eta, double* out) {
    if (!out) return PB_ERR_NULL;
    return guarded([&] { *out = phasebound::scheme_fpl_limit(n_sq, eta); });
}

pb_status pb_required_squeezing_db(double eta, double* squeezing_db,
                                   double* n_sq_out, int* present) {
    if (!squeezing_db || !present) return PB_ERR_NULL;
    return guarded([&] {
        const auto r = phasebound::required_squeezing_db(eta);
        *present = r.has_value() ? 1 : 0;
        *squeezing_db = r ? r->squeezing_db : kNan;
        if (n_sq_out) *n_sq_out = r ? r->n_sq : kNan;
    });
}

pb_status pb_optimal_nsq(double eta, double n, double* n_sq, double* fisher) {
    if (!n_sq || !fisher) return PB_ERR_NULL;
    return guarded([&] {
        const auto r = phasebound::optimal_nsq_fixed_n(eta, n);
        *n_sq = r.n_sq;
        *fisher = r.fisher;
    });
}

namespace {

phasebound::NetworkConfig to_config(const pb_network_config* cfg) {
    return phasebound::NetworkConfig(cfg->h, cfg->k, cfg->xi, cfg->phi_control,
                                     cfg->eta);
}

void copy_matrix(const phasebound::TransferMatrix& m, pb_transfer_matrix* out) {
    const std::complex<double> vals[4] = {m.t11, m.t12, m.t21, m.t22};
    for (int i = 0; i < 4; ++i) {
        out->t[i].re = vals[i].real();
        out->t[i].im = vals[i].imag();
    }
}

}  // namespace

pb_status pb_transfer_matrix(const pb_network_config* cfg, double theta,
                             pb_transfer_matrix* out) {
    if (!cfg || !out) return PB_ERR_NULL;
    return guarded(
        [&] { copy_matrix(phasebound::transfer_matrix(to_config(cfg), theta), out); });
}

pb_status pb_transfer_matrix_dtheta(const pb_network_config* cfg, double theta,
                                    pb_transfer_matrix* out) {
    if (!cfg || !out) return PB_ERR_NULL;
    return guarded([&] {
        copy_matrix(phasebound::transfer_matrix_dtheta(to_config(cfg), theta), out);
    });
}

pb_status pb_network_fpl(const pb_network_config* cfg, double theta,
                         double* out) {
    if (!cfg || !out) return PB_ERR_NULL;
    try {
        *out = phasebound::network_fpl(to_config(cfg), theta);
        return PB_OK;
    } catch (const std::domain_error& e) {
        return classify(e);
    }
}

pb_status pb_network_optimize(double eta, int h_max, double hxi_min,
                              double hxi_max, pb_network_optimum* out) {
    if (!out) return PB_ERR_NULL;
    return guarded([&] {
        const auto r = phasebound::optimize_network(
            eta, h_max > 0 ? h_max : 64, hxi_min > 0.0 ? hxi_min : 0.01,
            hxi_max > 0.0 ? hxi_max : 0.1);
        out->eta = r.eta;
        out->h = r.h;
        out->xi = r.xi;
        out->h_xi = r.h_xi;
        out->fpl = r.fpl;
        out->ratio_to_qsm = r.ratio_to_qsm;
    });
}

pb_status pb_network_optimize_continuous(int h_max, double hxi_min,
                                         double hxi_max,
                                         pb_continuous_optimum* out) {
    if (!out) return PB_ERR_NULL;
    return guarded([&] {
        const auto r = phasebound::optimize_network_continuous(
            h_max > 0 ? h_max : 2048, hxi_min > 0.0 ? hxi_min : 0.01,
            hxi_max > 0.0 ? hxi_max : 6.0);
        out->gamma = r.gamma;
        out->h = r.h;
        out->h_xi = r.h_xi;
        out->ratio = r.ratio;
    });
}

namespace {

phasebound::ImperfectionBudget to_budget(const pb_budget* b) {
    return phasebound::ImperfectionBudget(b->eta_p, b->eta_r, b->eta_m);
}

}  // namespace

pb_status pb_total_transmissivity(double eta, const pb_budget* b, int k,
                                  double* out) {
    if (!b || !out) return PB_ERR_NULL;
    return guarded(
        [&] { *out = phasebound::total_transmissivity(eta, to_budget(b), k); });
}

pb_status pb_phase_lost_photons(double eta, const pb_budget* b, int k,
                                double n_in, double* out) {
    if (!b || !out) return PB_ERR_NULL;
    return guarded([&] {
        *out = phasebound::phase_lost_photons(eta, to_budget(b), k, n_in);
    });
}

pb_status pb_imperfect_fpl(double eta, const pb_budget* b, int k, int strategy,
                           double* out) {
    if (!b || !out) return PB_ERR_NULL;
    return guarded([&] {
        *out = phasebound::imperfect_fpl(
            eta, to_budget(b), k,
            strategy ? phasebound::ImperfectStrategy::QuantumBound
                     : phasebound::ImperfectStrategy::Classical);
    });
}

pb_status pb_imperfect_optimize_k(double eta, const pb_budget* b, int strategy,
                                  int* k, double* fpl) {
    if (!b || !k || !fpl) return PB_ERR_NULL;
    return guarded([&] {
        const auto r = phasebound::optimize_k(
            eta, to_budget(b),
            strategy ? phasebound::ImperfectStrategy::QuantumBound
                     : phasebound::ImperfectStrategy::Classical);
        *k = r.k;
        *fpl = r.fpl;
    });
}

pb_status pb_imperfect_advantage(double eta, const pb_budget* b,
                                 pb_advantage* out) {
    if (!b || !out) return PB_ERR_NULL;
    return guarded([&] {
        const auto r = phasebound::advantage(eta, to_budget(b));
        out->k_classical = r.k_classical;
        out->k_quantum = r.k_quantum;
        out->fpl_classical = r.fpl_classical;
        out->fpl_quantum = r.fpl_quantum;
        out->rmse_reduction = r.rmse_reduction;
    });
}

pb_status pb_threshold_eta_r(double eta, double eta_pm, double precision,
                             double* threshold, int* present) {
    if (!threshold || !present) return PB_ERR_NULL;
    return guarded([&] {
        const auto r = phasebound::threshold_eta_r(
            eta, eta_pm, precision > 0.0 ? precision : 8e-5);
        *present = r.has_value() ? 1 : 0;
        *threshold = r.value_or(kNan);
    });
}

size_t pb_table_rows(const pb_table* t) { return t ? t->rows() : 0; }

size_t pb_table_cols(const pb_table* t) { return t ? t->cols : 0; }

const char* pb_table_col_name(const pb_table* t, size_t col) {
    if (!t || col >= t->col_names.size()) return nullptr;
    return t->col_names[col].c_str();
}

const char* pb_table_row_label(const pb_table* t, size_t row) {
    if (!t || row >= t->row_labels.size()) return nullptr;
    return t->row_labels[row].c_str();
}

double pb_table_value(const pb_table* t, size_t row, size_t col) {
    if (!t || col >= t->cols || row >= t->rows()) return kNan;
    return t->data[row * t->cols + col];
}

int pb_table_is_na(const pb_table* t, size_t row, size_t col) {
    return std::isnan(pb_table_value(t, row, col)) ? 1 : 0;
}

void pb_table_free(pb_table* t) { delete t; }

const char* pb_strategy_name(int strategy_code) {
    switch (strategy_code) {
        case PB_STRATEGY_CLASSICAL_DISCRETE:
            return phasebound::scan_strategy_name(
                phasebound::kScanClassicalDiscrete);
        case PB_STRATEGY_CLASSICAL_CONTINUOUS:
            return phasebound::scan_strategy_name(
                phasebound::kScanClassicalContinuous);
        case PB_STRATEGY_QUANTUM_DISCRETE:
            return phasebound::scan_strategy_name(
                phasebound::kScanQuantumDiscrete);
        default:
            return "unknown";
    }
}

pb_status pb_fig2a_scan(const double* etas, size_t n_etas,
                        unsigned strategy_mask, pb_mode mode, pb_table** out) {
    if (!etas || !out) return PB_ERR_NULL;
    return guarded([&] {
        const unsigned mask =
            strategy_mask ? strategy_mask : phasebound::kScanAllAnalytic;
        const auto rows = phasebound::fig2a_scan(
            std::span<const double>(etas, n_etas), mask, to_mode(mode));
        auto* t = new pb_table;
        t->col_names = {"eta", "strategy", "k", "fisher_per_lost",
                        "normalized_precision"};
        t->cols = 5;
        for (const auto& r : rows) {
            int code = PB_STRATEGY_CLASSICAL_DISCRETE;
            if (r.strategy == phasebound::kScanClassicalContinuous)
                code = PB_STRATEGY_CLASSICAL_CONTINUOUS;
            else if (r.strategy == phasebound::kScanQuantumDiscrete)
                code = PB_STRATEGY_QUANTUM_DISCRETE;
            t->data.insert(t->data.end(),
                           {r.eta, static_cast<double>(code), r.k,
                            r.fisher_per_lost, r.normalized_precision});
        }
        *out = t;
    });
}

pb_status pb_fig2b_scan(const double* etas, size_t n_etas, pb_table** out) {
    if (!etas || !out) return PB_ERR_NULL;
    return guarded([&] {
        auto* t = new pb_table;
        t->col_names = {"eta", "n_sq", "r", "squeezing_db"};
        t->cols = 4;
        for (size_t i = 0; i < n_etas; ++i) {
            const auto r = phasebound::required_squeezing_db(etas[i]);
            if (r) {
                t->data.insert(t->data.end(),
                               {etas[i], r->n_sq, r->r, r->squeezing_db});
            } else {
                t->data.insert(t->data.end(), {etas[i], kNan, kNan, kNan});
            }
        }
        *out = t;
    });
}

pb_status pb_fig4_surface(const double* etas, size_t n_etas,
                          const double* eta_pms, size_t n_pms, double precision,
                          pb_table** out) {
    if (!etas || !eta_pms || !out) return PB_ERR_NULL;
    return guarded([&] {
        const auto cells = phasebound::surface_grid(
            std::span<const double>(etas, n_etas),
            std::span<const double>(eta_pms, n_pms),
            precision > 0.0 ? precision : 8e-5);
        auto* t = new pb_table;
        t->col_names = {"eta", "eta_pm", "threshold_eta_r"};
        t->cols = 3;
        for (const auto& c : cells) {
            t->data.insert(t->data.end(),
                           {c.eta, c.eta_pm, c.threshold.value_or(kNan)});
        }
        *out = t;
    });
}

pb_status pb_reference_network_table(pb_table** out) {
    if (!out) return PB_ERR_NULL;
    auto* t = new pb_table;
    t->col_names = {"eta", "h", "h_xi", "ratio"};
    t->cols = 4;
    for (const auto& r : phasebound::reference::kNetworkTable) {
        t->data.insert(
            t->data.end(),
            {r.eta, static_cast<double>(r.h),
             r.h_xi == phasebound::reference::kNoHxi ? kNan : r.h_xi, r.ratio});
    }
    *out = t;
    return PB_OK;
}

pb_status pb_reference_continuous(pb_continuous_optimum* out) {
    if (!out) return PB_ERR_NULL;
    const auto& r = phasebound::reference::kContinuousOptimum;
    out->gamma = r.gamma;
    out->h = r.h;
    out->h_xi = r.h_xi;
    out->ratio = r.ratio;
    return PB_OK;
}

pb_status pb_reproduce(const char* target, int grid_n, double precision,
                       pb_table** report, int* all_pass) {
    if (!target || !report || !all_pass) return PB_ERR_NULL;
    return guarded([&] {
        phasebound::Report rep;
        const std::string name(target);
        if (name == "constants") {
            rep = phasebound::reproduce_constants();
        } else if (name == "table1") {
            rep = phasebound::reproduce_table1();
        } else if (name == "table2") {
            rep = phasebound::reproduce_table2();
        } else if (name == "fig2a") {
            rep = phasebound::reproduce_fig2a();
        } else if (name == "fig2b") {
            rep = phasebound::reproduce_fig2b();
        } else if (name == "fig4") {
            rep = phasebound::reproduce_fig4(grid_n > 0 ? grid_n : 10,
                                             precision > 0.0 ? precision : 8e-5);
        } else {
            throw std::domain_error("pb_reproduce: unknown target '" + name +
                                    "'");
        }
        *report = report_to_table(rep);
        *all_pass = rep.all_pass ? 1 : 0;
    });
}

}  // extern "C"
