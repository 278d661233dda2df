/* C interface to the consequential life-cycle assessment engine.
 *
 * Usage pattern:
 *   clca_project* p = NULL;
 *   if (clca_project_open("data/paris-2019/project.conf", &p) != CLCA_OK) {
 *     fprintf(stderr, "%s\n", clca_last_error());
 *     return 1;
 *   }
 *   clca_buf* out = NULL;
 *   if (clca_assess_csv(p, 0, 0, &out) == CLCA_OK) fputs(clca_buf_data(out), stdout);
 *   else fprintf(stderr, "%s\n", clca_project_error(p));
 *   clca_buf_free(out);
 *   clca_project_close(p);
 *
 * All functions return a status code; results come back through out
 * parameters. Returned buffers are NUL-terminated and owned by the caller
 * (release with clca_buf_free). Projects are immutable after opening, but the
 * per-project error string makes a clca_project not shareable across threads
 * without external locking; distinct projects are independent.
 */
#ifndef CLCA_H
#define CLCA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Anything nonzero left the out parameters untouched. */
#define CLCA_OK 0        /* success */
#define CLCA_E_IO 1      /* file missing or unreadable */
#define CLCA_E_PARSE 2   /* malformed number / CSV / JSON */
#define CLCA_E_SCHEMA 3  /* wrong columns, duplicates, out-of-range values */
#define CLCA_E_LINK 4    /* dangling cross-reference (mode, scenario, mix, ...) */
#define CLCA_E_DOMAIN 5  /* mathematically undefined request */
#define CLCA_E_EMPTY 6   /* no usable input rows */
#define CLCA_E_ARG 7     /* invalid argument to the call itself */

typedef struct clca_project clca_project; /* opaque: loaded, validated dataset */
typedef struct clca_buf clca_buf;         /* opaque: NUL-terminated text result */

const char* clca_version(void);

/* Load and validate a dataset from its project config file. On failure the
 * message is available via clca_last_error(). */
int clca_project_open(const char* config_path, clca_project** out);
void clca_project_close(clca_project* p);

/* Message of the last failed call on this project ("" when none). */
const char* clca_project_error(const clca_project* p);
/* Thread-local message of the last failed clca_project_open. */
const char* clca_last_error(void);

/* Everywhere below: population <= 0 selects the dataset's configured
 * population; digits <= 0 selects full (round-trip) precision, 3 matches
 * published-table rounding. */

/* Modal-shift vector: mode,survey_sum_km,delta_pkt. */
int clca_shift_csv(clca_project* p, double population, int digits, clca_buf** out);

/* Per-mode emission factors by life-cycle stage; mix_code NULL uses the
 * dataset's baseline electricity mix. */
int clca_factors_csv(clca_project* p, const char* mix_code, int digits, clca_buf** out);

/* Marginal impact report (mode x stage matrix / structured object). */
int clca_assess_csv(clca_project* p, double population, int digits, clca_buf** out);
int clca_assess_json(clca_project* p, double population, int digits, clca_buf** out);
int clca_assess_total(clca_project* p, double population, double* total_kg);

/* Sensitivity sweeps: CSV is parameter,total_kg; fit_json (optional, pass
 * NULL to skip) is a one-line model descriptor. Lifetime: grid_km NULL
 * selects a log-spaced default grid of n points (n = 0 -> 25). Servicing /
 * mix: n = 0 selects every scenario plus "none" / every mix, dataset order. */
int clca_sweep_lifetime_csv(clca_project* p, const double* grid_km, size_t n, int digits,
                            clca_buf** csv, clca_buf** fit_json);
int clca_sweep_servicing_csv(clca_project* p, const char* const* names, size_t n, int digits,
                             clca_buf** csv, clca_buf** fit_json);
int clca_sweep_mix_csv(clca_project* p, const char* const* codes, size_t n, int digits,
                       clca_buf** csv, clca_buf** fit_json);

/* Electricity-mix break-even: total = alpha + beta x intensity crosses zero
 * at `intensity`; from_above is 1 when totals fall as the mix gets dirtier.
 * Output pointers may be NULL when not wanted. */
int clca_breakeven_mix(clca_project* p, double* intensity, double* alpha, double* beta,
                       int* from_above);

/* Scooter emission factor (kg/pkt) at which the assessment breaks even. */
int clca_breakeven_ffes(clca_project* p, double* ef_kg_pkt);

/* Annualized construction flows of one street type: flow,amount_per_fu_year. */
int clca_street_flows_csv(clca_project* p, const char* street_id, int digits, clca_buf** out);

const char* clca_buf_data(const clca_buf* b);
size_t clca_buf_size(const clca_buf* b);
void clca_buf_free(clca_buf* b);

#ifdef __cplusplus
}
#endif

#endif /* CLCA_H */
