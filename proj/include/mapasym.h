/* C interface to the asymptotic-expansion library.  All functions return an
 * error code; results come back through out parameters.  Strings returned
 * through char** are heap-allocated and must be released with
 * ma_string_free.  On any nonzero return, ma_last_error_message() describes
 * the failure (thread-local). */
#ifndef MAPASYM_H
#define MAPASYM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  MA_OK = 0,
  MA_ERR_DOMAIN = 1,
  MA_ERR_RANGE = 2,
  MA_ERR_OVERFLOW = 3,
  MA_ERR_NO_CONVERGENCE = 4,
  MA_ERR_MATCH_FAILURE = 5,
  MA_ERR_ORDER = 6,
  MA_ERR_FIT = 7,
  MA_ERR_UNKNOWN = 99
};

/* map kinds */
enum {
  MA_MAP_STATIC_LOGISTIC = 0,
  MA_MAP_DYNAMIC_LOGISTIC = 1,
  MA_MAP_GALLERY_REGULAR = 2,
  MA_MAP_GALLERY_BOUNDARY_LAYER = 3,
  MA_MAP_GALLERY_DECAY = 4,
  MA_MAP_GALLERY_BLOWUP = 5
};

const char* ma_last_error_message(void);
void ma_string_free(char* s);

/* ---- iteration ---- */
int ma_step(int map_kind, double epsilon, double theta, int64_t n, double x, double* out);
/* CSV columns: n,x (plus lambda for logistic kinds) */
int ma_iterate_csv(int map_kind, double epsilon, double x0, double theta, int64_t n_max,
                   char** out_csv);
int ma_bifurcation_csv(double lambda_min, double lambda_max, int n_lambda, int64_t transient,
                       int64_t record, char** out_csv);

/* ---- equilibria and adiabatic manifolds ---- */
int ma_equilibrium_p1(double lambda, double* out);
int ma_equilibrium_p2(double lambda, double* out_plus, double* out_minus);
int ma_adiabatic_p1(double lambda, double epsilon, int order, double* out);
int ma_adiabatic_p2(double lambda, double epsilon, int order, double* out_plus,
                    double* out_minus);
/* which: 0 = 1-periodic, 1 = 2-periodic */
int ma_manifold_residual(double epsilon, double lambda, int order, int which, double* out);

/* ---- early static series (opaque handle) ---- */
typedef struct ma_early_series ma_early_series;
int ma_early_static_build(int order, ma_early_series** out);
int ma_early_static_eval(const ma_early_series* series, int64_t n, double epsilon, int order,
                         double* out);
/* exact-fraction rendering of the order-r envelope pair */
int ma_early_static_render(const ma_early_series* series, int r, char** out_f, char** out_g);
void ma_early_static_free(ma_early_series* series);

/* ---- static asymptotics ---- */
int ma_static_breakdown(double epsilon, double* out_n_star);
int ma_composite_static(int64_t n, double epsilon, double* out);
int ma_matching_constant_static(double* out);

/* ---- dynamic asymptotics ---- */
int ma_solve_k(double epsilon, double tol, double* out_k, double* out_residual,
               int* out_iterations);
int ma_dynamic_breakdown(double epsilon, double* out_n_star, double* out_k);
int ma_early_dynamic(int64_t n, double epsilon, int order, double* out);
/* eps_cubed nonzero selects the eps^3 denominator, zero the printed eps^(3/2) */
int ma_composite_dynamic(int64_t n, double epsilon, int eps_cubed, double* out);
int ma_matching_constant_dynamic(double epsilon, double* out);

/* ---- special functions ---- */
int ma_dawson(double x, double* out_value, double* out_abserr);
int ma_erfi(double x, double* out_value, double* out_abserr);

/* ---- analysis ---- */
/* figures 1..9, epsilon = 0 for the published default */
int ma_figure_csv(int which, double epsilon, char** out_csv);
/* scan: 0 = static sup-norm, 1..3 = dynamic rules (fixed t, transition, late).
 * CSV columns: epsilon,error,fitted_slope,fit_r2 (fit repeated per row). */
int ma_error_scan_csv(int scan, int eps_cubed, char** out_csv);
int ma_exponent_resolution(double* out_slope_cubed, double* out_slope_three_halves,
                           int* out_cubed_ok, int* out_three_halves_ok);

/* ---- strategy gallery ----
 * which: 0 regular, 1 boundary layer, 2 decay, 3 blowup.
 * out[0] worst_error, out[1] crossing_n, out[2] predicted_n,
 * out[3] long_run_level, out[4] finite_past_blowup (0/1). */
int ma_gallery_check(int which, double epsilon, double theta, double out[5]);

#ifdef __cplusplus
}
#endif

#endif
