#ifndef MONOPOLY_H
#define MONOPOLY_H

/*
 * C interface to the monopoly-map analysis library.
 *
 * All exact parameters are passed as strings: "p", "p/q", or decimals
 * like "3.303", parsed as exact rationals. Functions return MONO_OK on
 * success; on failure they return a status code and leave a message
 * retrievable via mono_last_error() (thread-local). Strings returned
 * through char** are heap-allocated and must be released with
 * mono_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    MONO_OK = 0,
    MONO_ERR_BADARG = 1,            /* NULL pointer or unparsable argument */
    MONO_ERR_DOMAIN = 2,            /* invalid value (nonpositive parameter, ...) */
    MONO_ERR_NONHYPERBOLIC = 3,     /* parameter on a bifurcation boundary */
    MONO_ERR_CERTIFICATION = 4,     /* refinement budget exhausted */
    MONO_ERR_DEGENERATE_PROBE = 5,  /* probe annihilates a border polynomial */
    MONO_ERR_INSUFFICIENT_DATA = 6, /* window too short, ... */
    MONO_ERR_INTERNAL = 7           /* library invariant violated */
} mono_status;

/* Opaque handle to a fixed-parameter iteration map. */
typedef struct mono_map mono_map;

/* Message describing the most recent failure on this thread. */
const char* mono_last_error(void);

void mono_string_free(char* s);

/* Model 1: F(x) = x + f(e - x^3), e, f > 0. */
mono_status mono_map_model1(const char* e, const char* f, mono_map** out);

/* Model 2: F(x) = x + K(a - 2bx + 3cx^2 - 4dx^3), all parameters > 0. */
mono_status mono_map_model2(const char* a, const char* b, const char* c, const char* d,
                            const char* k, mono_map** out);

void mono_map_free(mono_map* map);

/*
 * Stable-equilibrium report: the exact solution count of the
 * stable-equilibrium system, the signs of the relevant condition
 * polynomials, and one line per equilibrium with its stability.
 */
mono_status mono_stability_report(const mono_map* map, unsigned decimals, char** out);

/*
 * Exact n-cycle enumeration with stability classification. orbit_count /
 * stable_count may be NULL when only the text report is wanted.
 */
mono_status mono_cycles_report(const mono_map* map, unsigned n, unsigned decimals,
                               long* orbit_count, long* stable_count, char** out);

/* Magnitude enclosure (width <= `width`, a rational string) per n-cycle. */
mono_status mono_magnitudes_report(const mono_map* map, unsigned n, const char* width,
                                   unsigned decimals, char** out);

/*
 * Threshold search over K for the standard model-2 parameters
 * (a,b,c,d) = (18/5, 12/5, 3/5, 1/20): brackets of width <= tol where the
 * (orbit count, stable count) pair of the n-cycles changes. min_split may
 * be "0" to drop equal-endpoint segments immediately.
 */
mono_status mono_thresholds_report(unsigned n, const char* k_lo, const char* k_hi,
                                   const char* tol, const char* min_split, unsigned decimals,
                                   char** out);

/* Chaos certificate; method is "period3" or "snapback". */
mono_status mono_chaos_report(const mono_map* map, const char* method, unsigned decimals,
                              char** out);

/*
 * Floating-point simulation entry points. `params` holds the map
 * parameters in fixed order: model 1 -> {e, f}; model 2 -> {a, b, c, d, K}.
 * Scanned parameters are named by their letter and override the slot.
 */
mono_status mono_bif1d_csv(int model, const double* params, char scan, double lo, double hi,
                           unsigned resolution, double x0, char** out_csv);

mono_status mono_bif2d_ppm(int model, const double* params, char scan_x, double x_lo,
                           double x_hi, char scan_y, double y_lo, double y_hi, unsigned nx,
                           unsigned ny, double x0, const char* path);

/* Basin scan of initial states; returns a JSON report. */
mono_status mono_basins_json(const mono_map* map, double x0_lo, double x0_hi,
                             unsigned resolution, char** out_json);

/* Detected period of a single trajectory (24 = aperiodic/complex marker).
 * Divergent trajectories report period 0. */
mono_status mono_trajectory_period(int model, const double* params, double x0,
                                   unsigned* period_out);

#ifdef __cplusplus
}
#endif

#endif
