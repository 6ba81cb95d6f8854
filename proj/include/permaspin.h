/*
 * permaspin -- C API for a permutation-spin Ising-type model.
 *
 * Spins are permutations of {1..k}; the interaction energy between two
 * neighboring spins is a normalized permutation statistic of the quotient
 * spin. The library computes exact partition functions (transfer-matrix
 * trace and brute-force enumeration), closed-form and numeric spectra,
 * low-temperature and mean-field approximations, and runs a Metropolis
 * sampler. All handles are opaque; every fallible call returns a status
 * code and leaves a thread-local message readable via ps_last_error().
 */
#ifndef PERMASPIN_H
#define PERMASPIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ps_status {
    PS_OK = 0,
    PS_ERR_INVALID_ARGUMENT = 1,
    PS_ERR_CAP_EXCEEDED = 2,
    PS_ERR_NUMERIC = 3,
    PS_ERR_BUFFER_TOO_SMALL = 4
} ps_status;

typedef enum ps_stat_kind {
    PS_STAT_DES = 0,    /* descents; not inversion-symmetric */
    PS_STAT_INV = 1,    /* inversions */
    PS_STAT_DESTAT = 2  /* des(pi) + des(pi^{-1}) */
} ps_stat_kind;

typedef struct ps_spinset ps_spinset;
typedef struct ps_graph ps_graph;
typedef struct ps_chain ps_chain;

const char* ps_last_error(void);
const char* ps_status_name(ps_status status);

/* ---- spin sets ------------------------------------------------------- */

/* All k! permutations of {1..k}, lexicographic; 1 <= k <= 10. */
ps_status ps_spinset_full(int k, ps_spinset** out);
/* Pattern-avoiding subset; patterns_csv like "123,321" (digit strings). */
ps_status ps_spinset_avoiding(int k, const char* patterns_csv, ps_spinset** out);
void ps_spinset_free(ps_spinset* set);
int ps_spinset_k(const ps_spinset* set);
int ps_spinset_size(const ps_spinset* set);
ps_status ps_spinset_member(const ps_spinset* set, int index, char* buf, size_t buflen);
ps_status ps_spinset_label(const ps_spinset* set, char* buf, size_t buflen);

/* ---- permutation statistics and generating functions ----------------- */

ps_status ps_statistic(ps_stat_kind kind, const char* perm, int* out);
/* Stat_k(x) by enumeration, as a polynomial string "1 + 4x^2 + x^4". */
ps_status ps_stat_gf(ps_stat_kind kind, int k, char* buf, size_t buflen);
/* Double Eulerian generating function from the truncated double series. */
ps_status ps_cddes_closed_form(int n, char* buf, size_t buflen);

/* ---- graphs ----------------------------------------------------------- */

ps_status ps_graph_ring(int n, ps_graph** out);
ps_status ps_graph_path(int n, ps_graph** out);
ps_status ps_graph_complete(int n, ps_graph** out);
/* Edge list text, one 1-based "u v" pair per line; n_override of 0 infers
 * the vertex count from the largest endpoint. */
ps_status ps_graph_parse(const char* edge_list_text, int n_override, ps_graph** out);
void ps_graph_free(ps_graph* graph);
int ps_graph_n(const ps_graph* graph);
int ps_graph_edge_count(const ps_graph* graph);

/* ---- model parameters -------------------------------------------------- */

typedef struct ps_params {
    double beta;       /* inverse temperature, > 0 */
    double coupling;   /* J */
    double field;      /* H */
    ps_stat_kind stat;
} ps_params;

/* ---- exact computations ------------------------------------------------ */

/* Exact sum over all |P|^n configurations (cap 1e8). */
ps_status ps_brute_force_z(const ps_graph* graph, const ps_spinset* set,
                           const ps_params* params, double* z_out);

/* Ring partition function via the transfer-matrix trace (n >= 3), its log,
 * and the free-energy density -(J+H) - ln(lambda_max)/beta. Output pointers
 * may be NULL. */
ps_status ps_ring_exact(const ps_spinset* set, const ps_params* params, int n,
                        double* z_out, double* ln_z_out, double* f_out);

ps_status ps_free_energy_ring(const ps_spinset* set, const ps_params* params, double* f_out);

/* Zero-field product form k! e^{bJ} (e^{bJ} Stat_k(e^{-2bJ/s_max}))^{n-1}
 * and its free-energy density. Requires H = 0. */
ps_status ps_zero_field_z(int k, const ps_params* params, int n, double* z_out);
ps_status ps_zero_field_f(int k, const ps_params* params, double* f_out);

/* Transfer-matrix variables a = e^{-beta H/s_max}, b = e^{-2 beta J/s_max}. */
ps_status ps_transfer_ab(const ps_params* params, int k, double* a_out, double* b_out);

/* ---- spectra ------------------------------------------------------------ */

typedef enum ps_spectrum_method {
    PS_SPECTRUM_NUMERIC = 0,
    PS_SPECTRUM_CLOSED_NO_MONOTONE = 1, /* P = S3(123,321), destat */
    PS_SPECTRUM_CLOSED_NO_IDENTITY = 2, /* P = S3(123), destat */
    PS_SPECTRUM_CUBIC_PLUS_LINEAR = 3   /* P = S3, destat */
} ps_spectrum_method;

/* Eigenvalues of the transfer matrix, descending. `method` must be NUMERIC
 * or the closed form matching the spin set. count_out receives |P|. */
ps_status ps_spectrum(const ps_spinset* set, const ps_params* params,
                      ps_spectrum_method method, double* eigenvalues, int capacity,
                      int* count_out);
/* The closed-form method available for this set/statistic, or -1. */
int ps_spectrum_closed_method(const ps_spinset* set, ps_stat_kind stat);
const char* ps_spectrum_method_name(ps_spectrum_method method);

/* ---- cubic machinery (S3/destat characteristic factor) ------------------ */

typedef struct ps_cubic_point {
    double c, d;
    double lambda_star;   /* largest root of the cubic factor */
    double lambda4;       /* c(1-d)^2, simple */
    double lambda5;       /* c(1-d^2), double */
    double delta0, delta1, delta2;
    int used_fallback;    /* nonzero if the bisection fallback was used */
} ps_cubic_point;

ps_status ps_cubic_eval(double c, double d, ps_cubic_point* out);
/* Independent bisection root finder for the same cubic (oracle path). */
ps_status ps_cubic_max_root_bisect(double c, double d, double* out);

/* ---- low-temperature class sums (S3/destat ring) ------------------------ */

typedef struct ps_lowtemp_report {
    double z_uniform;
    double z_domain_wall;
    double z_approx;
    double z_exact;
    double ln_ratio;     /* ln(z_approx) / ln(z_exact) */
    int field_case;      /* -1 negative, 0 zero, +1 positive */
    double f_simple;     /* -(J + |H|) */
    double f_lambda4;    /* -(J+H) - ln(lambda4)/beta */
    double f_exact;      /* ring free-energy density */
} ps_lowtemp_report;

ps_status ps_lowtemp(int n, const ps_params* params, ps_lowtemp_report* out);

/* ---- mean field ---------------------------------------------------------- */

typedef struct ps_meanfield_report {
    double z_factorized;
    double z_direct;
    double dominant_estimate;
    double f;            /* -ln(z_factorized) / (beta n) */
} ps_meanfield_report;

/* n >= 2 sites, q >= 1 neighbors (2 for 1D, 4 for 2D), J > 0. */
ps_status ps_meanfield(int n, int q, const ps_params* params, ps_meanfield_report* out);

/* ---- Monte Carlo ---------------------------------------------------------- */

/* Single-site Metropolis chain; |P| >= 2. Fixed seed gives a bit-identical
 * trajectory. */
ps_status ps_chain_new(const ps_graph* graph, const ps_spinset* set,
                       const ps_params* params, uint64_t seed, ps_chain** out);
void ps_chain_free(ps_chain* chain);
/* One sweep (= n single-site updates); reports the energy and the mean
 * order parameter phi(pi, id) after the sweep. */
ps_status ps_chain_sweep(ps_chain* chain, double* energy_out, double* order_out);

typedef struct ps_mc_summary {
    double mean_energy_per_site;
    double se_energy;
    double mean_order;
    double se_order;
    double acceptance_rate;
    uint64_t sweeps;
    uint64_t burn_in;
} ps_mc_summary;

ps_status ps_mc_sample(const ps_graph* graph, const ps_spinset* set,
                       const ps_params* params, uint64_t sweeps, uint64_t burn_in,
                       uint64_t seed, ps_mc_summary* out);

/* ---- verification suite ---------------------------------------------------- */

/* Called once per check: name, one-line detail, pass flag, and whether the
 * line is an informational record rather than an assertion. */
typedef void (*ps_verify_callback)(const char* name, const char* detail, int pass,
                                   int informational, void* user);

/* Runs the cross-validation suite; returns the number of failed checks.
 * quick != 0 restricts enumeration sizes and grids. */
ps_status ps_verify(int quick, ps_verify_callback callback, void* user, int* failures_out);

#ifdef __cplusplus
}
#endif

#endif /* PERMASPIN_H */
