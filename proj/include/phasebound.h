/* Copyright 2026 The Phasebound Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the phasebound shared library.
 *
 * phasebound evaluates and optimizes strategies for measuring an optical
 * phase that carries an intrinsic transmissive loss, using the Fisher
 * information per photon lost at the phase element as the figure of merit.
 * It covers coherent multi-pass probing, the corresponding quantum bounds,
 * phase-squeezed Gaussian probes with homodyne readout, interference
 * networks of repeated lossy interrogations, and multi-pass loops with
 * preparation/round-trip/measurement losses.
 *
 * All functions return pb_status; outputs go through pointer arguments.
 * Variable-size results are returned as opaque pb_table handles that the
 * caller releases with pb_table_free. Everything is thread-safe and
 * deterministic: equal inputs produce bit-equal outputs.
 */

#ifndef PHASEBOUND_H
#define PHASEBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PB_API __declspec(dllexport)
#elif defined(__GNUC__)
#define PB_API __attribute__((visibility("default")))
#else
#define PB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pb_status {
    PB_OK = 0,
    PB_ERR_INVALID = 1, /* argument outside its documented range */
    PB_ERR_DOMAIN = 2,  /* numerically undefined (e.g. nothing is lost) */
    PB_ERR_NULL = 3     /* required pointer argument was NULL */
} pb_status;

PB_API const char* pb_status_message(pb_status status);

/* Detail message for the last non-PB_OK status on this thread. */
PB_API const char* pb_last_error(void);

typedef enum pb_mode {
    PB_MODE_TM = 0, /* two-mode differential phase */
    PB_MODE_SM = 1  /* single-mode phase with ideal reference, 4x TM */
} pb_mode;

typedef enum pb_quantum_norm {
    PB_NORM_CONTINUOUS_LIMIT = 0, /* continuous-pass quantum limit */
    PB_NORM_DISCRETE_BEST = 1     /* best integer-pass quantum bound */
} pb_quantum_norm;

/* ---- universal constants ---------------------------------------------- */

typedef struct pb_constants {
    double w;               /* principal Lambert W at -2/e^2 */
    double k_coeff;         /* optimal passes = k_coeff / ln(1/eta) */
    double gamma_opt;       /* optimal total transmissivity */
    double cl_const;        /* optimal classical F' times ln^2(eta) */
    double advantage_ratio; /* classical/quantum RMSE ratio, continuous k */
} pb_constants;

/* Principal Lambert W branch, w e^w = x, for x >= -1/e. */
PB_API pb_status pb_lambert_w0(double x, double* w);

PB_API pb_status pb_metrology_constants(pb_constants* out);

/* ---- lossy phase channel ---------------------------------------------- */

/* k-fold composition of the channel: (eta, theta) -> (eta^k, k theta). */
PB_API pb_status pb_compose(double eta, double theta, double k,
                            double* eta_out, double* theta_out);

/* Mean photons lost (and incident) at the phase for n_in input photons
 * making k passes. lost = incident * (1 - eta). */
PB_API pb_status pb_lost_photons(double eta, double k, double n_in,
                                 double* lost);
PB_API pb_status pb_incident_photons(double eta, double k, double n_in,
                                     double* incident);

/* Total photons incident over n_passes recirculations of a coherent probe:
 * n_in * (1 + eta + ... + eta^(n_passes-1)). */
PB_API pb_status pb_classical_incident_photons(double eta, int n_passes,
                                               double n_in, double* out);

typedef struct pb_noon_comparison {
    double noon_incident;
    double classical_incident;
    int classical_fewer;
} pb_noon_comparison;

/* Incident-photon count of an N-photon path-entangled probe versus an
 * equally informative recirculated coherent probe. */
PB_API pb_status pb_noon_comparison(double eta, int n, pb_noon_comparison* out);

/* ---- closed-form strategy evaluations --------------------------------- */

/* Coherent multi-pass Fisher information per lost photon,
 * eta^k k^2/(1-eta^k), times 4 in SM. */
PB_API pb_status pb_classical_fpl(double eta, double k, pb_mode mode,
                                  double* out);

/* Continuous pass count maximizing pb_classical_fpl. */
PB_API pb_status pb_classical_kopt(double eta, double* out);

/* Optimal classical multi-pass value; with discrete != 0 the pass count is
 * the best integer. k_out may be NULL. */
PB_API pb_status pb_classical_fpl_opt(double eta, pb_mode mode, int discrete,
                                      double* fpl, double* k_out);

/* Quantum bound per lost photon at k passes, eta^k k^2/(1-eta^k)^2, times 4
 * in SM; and its continuous-pass supremum 1/ln^2(eta) (4/ln^2(eta) in SM). */
PB_API pb_status pb_quantum_bound_fpl(double eta, double k, pb_mode mode,
                                      double* out);
PB_API pb_status pb_quantum_bound_limit(double eta, pb_mode mode, double* out);

/* Classical-to-quantum RMSE ratio sqrt(F'_cl/Q'). Mode-independent. */
PB_API pb_status pb_advantage_ratio(double eta, int discrete,
                                    pb_quantum_norm norm, double* out);

/* ---- Gaussian probe with homodyne readout ----------------------------- */

typedef struct pb_gaussian_state {
    double d[2];     /* quadrature means */
    double gamma[4]; /* row-major 2x2 covariance; vacuum = I/4 */
} pb_gaussian_state;

/* Phase-squeezed coherent state: displacement alpha, squeezing r, rotated
 * by varphi. */
PB_API pb_status pb_gaussian_prepare(double alpha, double r, double varphi,
                                     pb_gaussian_state* out);

PB_API pb_status pb_gaussian_apply_loss_phase(const pb_gaussian_state* in,
                                              double eta, double theta,
                                              pb_gaussian_state* out);

/* Fisher information of a normal outcome: dmean^2/v + dvar^2/(2 v^2). */
PB_API pb_status pb_homodyne_fisher(double mean, double variance, double dmean,
                                    double dvariance, double* out);

typedef struct pb_homodyne_signal {
    double mean;
    double variance;
    double dmean;
    double dvariance;
} pb_homodyne_signal;

/* x1-quadrature statistics after the lossy phase with exact analytic
 * theta-derivatives. */
PB_API pb_status pb_gaussian_homodyne_signal(double alpha, double r,
                                             double varphi, double eta,
                                             double theta,
                                             pb_homodyne_signal* out);

/* Closed-form homodyne Fisher information at the locked readout angle:
 * 4 alpha^2 eta / [1 + (e^{-2r} - 1) eta]. */
PB_API pb_status pb_gaussian_scheme_fisher(double alpha, double r, double eta,
                                           double* out);

/* Large-intensity Fisher information per lost photon at fixed squeezing
 * photon number n_sq. */
PB_API pb_status pb_gaussian_fpl_limit(double n_sq, double eta, double* out);

/* Squeezing (dB) needed to match the optimal classical multi-pass value.
 * present = 0 when unreachable; n_sq_out may be NULL. */
PB_API pb_status pb_required_squeezing_db(double eta, double* squeezing_db,
                                          double* n_sq_out, int* present);

/* Optimal squeezing share of a fixed mean photon number n, with the
 * resulting Fisher information. */
PB_API pb_status pb_optimal_nsq(double eta, double n, double* n_sq,
                                double* fisher);

/* ---- interference networks -------------------------------------------- */

typedef struct pb_network_config {
    int h;              /* modules, >= 1 */
    double k;           /* passes per module, > 0 */
    double xi;          /* beam-splitter angle, in (0, 2 pi) */
    double phi_control; /* control phase added to k*theta */
    double eta;         /* per-pass transmissivity, in (0, 1) */
} pb_network_config;

typedef struct pb_complex {
    double re;
    double im;
} pb_complex;

typedef struct pb_transfer_matrix {
    pb_complex t[4]; /* row-major: t11 t12 t21 t22 */
} pb_transfer_matrix;

PB_API pb_status pb_transfer_matrix(const pb_network_config* cfg, double theta,
                                    pb_transfer_matrix* out);
PB_API pb_status pb_transfer_matrix_dtheta(const pb_network_config* cfg,
                                           double theta,
                                           pb_transfer_matrix* out);

/* Coherent-probe Fisher information per lost photon of the network.
 * PB_ERR_DOMAIN when essentially no light is lost. */
PB_API pb_status pb_network_fpl(const pb_network_config* cfg, double theta,
                                double* out);

typedef struct pb_network_optimum {
    double eta;
    int h;
    double xi;
    double h_xi;
    double fpl;
    double ratio_to_qsm; /* vs the single-pass bound 4 eta/(1-eta)^2 */
} pb_network_optimum;

/* Discrete campaign (k = 1, module phase 0): exhaustive h scan with the
 * beam-splitter angle maximized over h*xi in [hxi_min, hxi_max]. Pass
 * h_max <= 0 and hxi_* <= 0 for the reference defaults (64, 0.01, 0.1),
 * which track the weak-coupling branch of the objective. */
PB_API pb_status pb_network_optimize(double eta, int h_max, double hxi_min,
                                     double hxi_max, pb_network_optimum* out);

typedef struct pb_continuous_optimum {
    double gamma; /* per-module total transmissivity eta^k */
    int h;
    double h_xi;
    double ratio; /* vs the continuous-pass quantum limit 4/ln^2(eta) */
} pb_continuous_optimum;

/* Continuous campaign over (gamma, xi, h); eta-independent after the
 * reparameterization gamma = eta^k. Defaults (h_max <= 0): 2048, window
 * [0.01, 6]. */
PB_API pb_status pb_network_optimize_continuous(int h_max, double hxi_min,
                                                double hxi_max,
                                                pb_continuous_optimum* out);

/* ---- imperfect multi-pass loops --------------------------------------- */

typedef struct pb_budget {
    double eta_p; /* preparation transmissivity, (0, 1] */
    double eta_r; /* per-round-trip transmissivity, (0, 1] */
    double eta_m; /* measurement transmissivity, (0, 1] */
} pb_budget;

PB_API pb_status pb_total_transmissivity(double eta, const pb_budget* b, int k,
                                         double* out);
PB_API pb_status pb_phase_lost_photons(double eta, const pb_budget* b, int k,
                                       double n_in, double* out);

/* strategy: 0 = classical, 1 = quantum bound. */
PB_API pb_status pb_imperfect_fpl(double eta, const pb_budget* b, int k,
                                  int strategy, double* out);
PB_API pb_status pb_imperfect_optimize_k(double eta, const pb_budget* b,
                                         int strategy, int* k, double* fpl);

typedef struct pb_advantage {
    int k_classical;
    int k_quantum;
    double fpl_classical;
    double fpl_quantum;
    double rmse_reduction;
} pb_advantage;

PB_API pb_status pb_imperfect_advantage(double eta, const pb_budget* b,
                                        pb_advantage* out);

/* Highest eta_r granting an RMSE reduction above 20%, to +/- precision
 * (pass <= 0 for the default 8e-5). present = 0 when no eta_r works. */
PB_API pb_status pb_threshold_eta_r(double eta, double eta_pm, double precision,
                                    double* threshold, int* present);

/* ---- tables ------------------------------------------------------------ */

/* Opaque numeric table with named columns (and, for report tables, named
 * rows). Missing values are NaN; pb_table_is_na tests for them. */
typedef struct pb_table pb_table;

PB_API size_t pb_table_rows(const pb_table* t);
PB_API size_t pb_table_cols(const pb_table* t);
PB_API const char* pb_table_col_name(const pb_table* t, size_t col);
/* Returns NULL when the table has no row labels. */
PB_API const char* pb_table_row_label(const pb_table* t, size_t row);
PB_API double pb_table_value(const pb_table* t, size_t row, size_t col);
PB_API int pb_table_is_na(const pb_table* t, size_t row, size_t col);
PB_API void pb_table_free(pb_table* t);

/* Strategy codes used in scan tables. */
enum {
    PB_STRATEGY_CLASSICAL_DISCRETE = 0,
    PB_STRATEGY_CLASSICAL_CONTINUOUS = 1,
    PB_STRATEGY_QUANTUM_DISCRETE = 2
};
PB_API const char* pb_strategy_name(int strategy_code);

/* Normalized-precision scan over an eta grid. strategy_mask: bit i selects
 * strategy code i; 0 selects all. Columns:
 * eta, strategy, k, fisher_per_lost, normalized_precision. */
PB_API pb_status pb_fig2a_scan(const double* etas, size_t n_etas,
                               unsigned strategy_mask, pb_mode mode,
                               pb_table** out);

/* Required squeezing across an eta grid. Columns: eta, n_sq, r,
 * squeezing_db (NA where unreachable). */
PB_API pb_status pb_fig2b_scan(const double* etas, size_t n_etas,
                               pb_table** out);

/* Threshold surface over an (eta, eta_pm) grid, row-major by eta.
 * Columns: eta, eta_pm, threshold_eta_r (NA where absent). */
PB_API pb_status pb_fig4_surface(const double* etas, size_t n_etas,
                                 const double* eta_pms, size_t n_pms,
                                 double precision, pb_table** out);

/* ---- reference campaigns ----------------------------------------------- */

/* Stored reference values: the discrete network campaign table (columns
 * eta, h, h_xi, ratio; h_xi is NA on the flat row) and the continuous
 * campaign optimum. */
PB_API pb_status pb_reference_network_table(pb_table** out);
PB_API pb_status pb_reference_continuous(pb_continuous_optimum* out);

/* Re-run a reference campaign and compare against the stored values.
 * Targets: "constants", "table1", "table2", "fig2a", "fig2b", "fig4".
 * grid_n and precision apply to "fig4" (pass <= 0 for defaults 10, 8e-5).
 * The report table has labelled rows and columns actual, lo, hi, pass;
 * all_pass is set to 0/1. */
PB_API pb_status pb_reproduce(const char* target, int grid_n, double precision,
                              pb_table** report, int* all_pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PHASEBOUND_H */
