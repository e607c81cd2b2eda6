/* Beurling generalized prime systems with prescribed oscillation: C API.
 *
 * Every fallible call returns a bl_status; on failure the thread-local
 * bl_last_error() message describes it. Objects are opaque handles released
 * with their _destroy function (NULL is accepted). */
#ifndef BEURLING_BEURLING_H
#define BEURLING_BEURLING_H

#include <stddef.h>
#include <stdint.h>

#if defined(BEURLING_BUILDING_LIBRARY)
#define BL_API __attribute__((visibility("default")))
#else
#define BL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bl_status {
  BL_OK = 0,
  BL_E_DOMAIN = 1,
  BL_E_INVALID_ARGUMENT = 2,
  BL_E_CONVERGENCE = 3,
  BL_E_CERTIFICATION = 4,
  BL_E_TOLERANCE = 5,
  BL_E_IO = 6,
  BL_E_RANGE = 7,
  BL_E_INTERNAL = 99
} bl_status;

typedef struct bl_complex {
  double re;
  double im;
} bl_complex;

typedef struct bl_params bl_params;
typedef struct bl_primes bl_primes;
typedef struct bl_config bl_config;

BL_API const char* bl_version(void);
BL_API const char* bl_last_error(void);
BL_API const char* bl_status_name(bl_status status);

/* G(z) = 1 - (e^{-z} - e^{-2z})/z and its zeros */
BL_API bl_status bl_g_eval(bl_complex z, bl_complex* out);
BL_API bl_status bl_g_derivative(bl_complex z, bl_complex* out);
BL_API bl_status bl_g_log(bl_complex z, bl_complex* out); /* Re z > 0 */

typedef struct bl_gzero {
  int index;
  bl_complex location;
  double residual;
  int rect_winding;
  int strip_winding;
} bl_gzero;

/* Writes zeros 1..n_max (upper half plane) into out[0..n_max-1]. */
BL_API bl_status bl_g_zeros(int n_max, double b_cap, bl_gzero* out, size_t capacity);

/* g(u) and the Mellin form of log G */
BL_API bl_status bl_gdensity(double u, double* out);
BL_API bl_status bl_mellin_log_g(bl_complex z, double tol, bl_complex* out, double* tail_bound);
BL_API bl_status bl_decay_slope(double w_lo, double w_hi, double* slope);

/* System parameters l_k = 4^k, gamma_k = exp(4^{beta k}) */
BL_API bl_status bl_params_create(double beta, int K, bl_params** out);
BL_API void bl_params_destroy(bl_params* params);
BL_API bl_status bl_params_gamma(const bl_params* params, int k, double* out);
BL_API bl_status bl_params_k_beta(const bl_params* params, int* out);

/* truncated != 0 selects f_{C,K} with K from params */
BL_API bl_status bl_density(const bl_params* params, int truncated, double v, double* out);
BL_API bl_status bl_pi_c(const bl_params* params, int truncated, double x, double* out);
BL_API bl_status bl_li(double x, double* out);
BL_API bl_status bl_chebyshev_delta(const bl_params* params, int truncated, double w_lo,
                                    double w_hi, int n, double* delta, double* min_density);

/* Prime sequences; scheme is "median" or "random" */
BL_API bl_status bl_primes_generate(const bl_params* params, int truncated, double x_max,
                                    const char* scheme, uint64_t seed, int threads,
                                    bl_primes** out);
BL_API bl_status bl_primes_from_array(const double* primes, size_t n, double x_max,
                                      bl_primes** out);
BL_API bl_status bl_primes_save(const bl_primes* primes, const char* stem);
BL_API bl_status bl_primes_load(const char* stem, bl_primes** out);
BL_API void bl_primes_destroy(bl_primes* primes);
BL_API size_t bl_primes_count(const bl_primes* primes);
BL_API const double* bl_primes_data(const bl_primes* primes);
BL_API bl_status bl_pi_count(const bl_primes* primes, double x, size_t* out);
BL_API bl_status bl_discrepancy(const bl_primes* primes, const bl_params* params, int truncated,
                                double x, double t, double* out);

/* Counting functions */
BL_API bl_status bl_count_n(const bl_primes* primes, double x, int threads, uint64_t* out);
BL_API bl_status bl_psi(const bl_primes* primes, double x, double* out);
BL_API bl_status bl_pi_riemann(const bl_primes* primes, double x, double* out);
BL_API bl_status bl_pi_from_psi(const bl_primes* primes, double x, double* out);
/* Cumulative N on the grid e^{jh}, j = 0..floor(W/h), from exp* of the prime
 * powers (atomic) or of f_{C,K} (continuous, K from params). */
BL_API bl_status bl_exp_star_primes(const bl_primes* primes, double W, double h, double* out,
                                    size_t capacity, size_t* written);
BL_API bl_status bl_exp_star_continuous(const bl_params* params, double W, double h, double* out,
                                        size_t capacity, size_t* written);

/* Zeta functions */
BL_API bl_status bl_zeta_c_product(const bl_params* params, bl_complex s, double tol,
                                   bl_complex* out, int* terms);
BL_API bl_status bl_zeta_ck(const bl_params* params, int K, bl_complex s, bl_complex* out);
BL_API bl_status bl_zeta_continuous_measure(const bl_params* params, int truncated, double h,
                                            double W, bl_complex s, bl_complex* out);
BL_API bl_status bl_residue_ak(const bl_params* params, int K, double* out);
BL_API bl_status bl_density_a_continuous(const bl_params* params, int K, double* out);
BL_API bl_status bl_density_a(const bl_primes* primes, const bl_params* params, int truncated,
                              double H, double* out, double* error);
BL_API bl_status bl_log_zeta_gap(const bl_primes* primes, const bl_params* params, int K,
                                 bl_complex s, bl_complex* out);

/* Oscillation analysis */
BL_API bl_status bl_ik(const bl_params* params, int k, double log_x, int asymptotic,
                       double* value, double* uncertainty);
BL_API bl_status bl_psi_c(const bl_params* params, double log_x, int asymptotic, double* out);
BL_API bl_status bl_envelope(double beta, double log_x, double* lambda_max, double* mu, int* k0,
                             double* log_E);

typedef struct bl_oscillation_record {
  double log_x;
  double psiC;
  double E;
  double ratio; /* (x - psi_C(x)) / E(x) */
  int k0;
  double mu_frac;
} bl_oscillation_record;

BL_API bl_status bl_oscillation_search(const bl_params* params, double log_x_center,
                                       double half_width, int target_sign, int threads,
                                       bl_oscillation_record* out);
BL_API bl_status bl_perron_check(const bl_params* params, int K, double x, double kappa, double T,
                                 double* lhs, double* rhs, double* tail);

/* Experiment harness */
BL_API bl_status bl_config_create(bl_config** out);
BL_API void bl_config_destroy(bl_config* config);
BL_API bl_status bl_config_load(bl_config* config, const char* path);
BL_API bl_status bl_config_set(bl_config* config, const char* key, const char* value);
/* Returns the exit status (0 ok, 1 tolerance failure, 2 invalid config) and
 * copies the report, truncated and NUL-terminated, into report when given. */
BL_API int bl_run(const char* subcommand, const bl_config* config, char* report,
                  size_t report_size);

typedef struct bl_criterion {
  int id;
  int passed;
  double measured;
  double seconds;
  char name[64];
  char detail[1024];
} bl_criterion;

BL_API int bl_acceptance_count(void);
BL_API bl_status bl_acceptance_run(int id, int threads, bl_criterion* out);

#ifdef __cplusplus
}
#endif

#endif /* BEURLING_BEURLING_H */
