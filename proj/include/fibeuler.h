/*
 * fibeuler — exact and asymptotic coefficients of the Fibonacci-weighted
 * product U(x) = prod_{k>=1} (1 - x^k)^(-F_{k+z}).
 *
 * C interface of the shared library. All functions are thread-safe; every
 * output string is heap-allocated and must be released with
 * fe_free_string(). On any status other than FE_OK, fe_last_error() returns
 * a description (thread-local, valid until the next failing call on the
 * same thread).
 *
 * `digits` parameters request decimal digits that must survive an internal
 * recomputation at elevated precision; calls refuse (FE_ERR_CONVERGENCE or
 * FE_ERR_DOMAIN) rather than return uncertified digits.
 */
#ifndef FIBEULER_H
#define FIBEULER_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(FIBEULER_BUILDING)
#define FIBEULER_API __attribute__((visibility("default")))
#else
#define FIBEULER_API
#endif

typedef enum fe_status {
    FE_OK = 0,
    FE_ERR_DOMAIN = 1,      /* argument outside the supported domain */
    FE_ERR_CONVERGENCE = 2, /* solver or certification missed its tolerance */
    FE_ERR_INTERNAL = 3,    /* internal consistency failure (a bug) */
    FE_ERR_IO = 4,          /* file read/write failure */
    FE_ERR_PARSE = 5,       /* malformed input text */
    FE_ERR_NETWORK = 6,     /* fetch failed or offline with cold cache */
    FE_ERR_MISMATCH = 7     /* cross-check found disagreeing terms */
} fe_status;

/* Library version, static storage. */
FIBEULER_API const char* fe_version(void);

/* Description of this thread's most recent failure ("" if none). */
FIBEULER_API const char* fe_last_error(void);

/* Releases any string output produced by this library. */
FIBEULER_API void fe_free_string(char* s);

/* ------------------------------------------------------------------ */
/* Integer primitives                                                  */

/* F_m as decimal text; F_{-1} = 1, F_0 = 0, F_1 = 1. m < -1 is refused. */
FIBEULER_API fe_status fe_fibonacci(long m, char** out_decimal);

/* (1+sqrt 5)/2 truncated to `digits` significant digits. */
FIBEULER_API fe_status fe_golden_ratio(int digits, char** out_decimal);

/* ------------------------------------------------------------------ */
/* Exact coefficients                                                  */

typedef struct fe_sequence fe_sequence;

/* Terms a_0..a_n_max for shift z (z >= -1). threads > 1 parallelizes the
 * internal convolution without changing results. */
FIBEULER_API fe_status fe_euler_transform(int z, long n_max, int threads,
                                          fe_sequence** out);
FIBEULER_API long fe_sequence_size(const fe_sequence* seq);
FIBEULER_API fe_status fe_sequence_term(const fe_sequence* seq, long n,
                                        char** out_decimal);
/* Writes `n a_n` lines (b-file layout) for the whole sequence. */
FIBEULER_API fe_status fe_sequence_write_bfile(const fe_sequence* seq,
                                               const char* path);
FIBEULER_API void fe_sequence_free(fe_sequence* seq);

/* ------------------------------------------------------------------ */
/* Constants and the coefficient estimate                              */

/* S(z) (the exponent's correction constant), truncated to `digits` digits.
 * out_certified (optional) receives the escalation-certified digit count. */
FIBEULER_API fe_status fe_constant_S(int z, int digits, char** out_decimal,
                                     int* out_certified);

/* The hyperbolic-sum form of S(0); same certification contract. */
FIBEULER_API fe_status fe_constant_S_hyperbolic(int digits, char** out_decimal,
                                                int* out_certified);

/* c(z), the limiting curvature correction. */
FIBEULER_API fe_status fe_constant_c(int z, int digits, char** out_decimal,
                                     int* out_certified);

/* Natural log of the closed-form estimate of a_n. */
FIBEULER_API fe_status fe_asymptotic_log(long n, int z, int digits,
                                         char** out_decimal);

/* The estimate as mantissa ("d.ddd...", `digits` significant digits,
 * truncated) and decimal exponent. */
FIBEULER_API fe_status fe_asymptotic_decimal(long n, int z, int digits,
                                             char** out_mantissa, long* out_exp10);

/* ------------------------------------------------------------------ */
/* Saddle root                                                         */

/* Solves x U'(x)/U(x) = n and evaluates the root expansion, in one call:
 *   out_r           the solved root (digits significant digits)
 *   out_r_expansion three-term expansion at the same n
 *   out_abs_diff    |solved - expansion|
 *   out_scaled_diff |solved - expansion| * n^(3/2), as a double
 *   out_residual    |lhs(root) - n| at acceptance
 *   out_truncation  series truncation index of the accepted evaluation
 * Any output pointer may be NULL to skip it. */
FIBEULER_API fe_status fe_saddle(long n, int z, int digits, char** out_r,
                                 char** out_r_expansion, char** out_abs_diff,
                                 double* out_scaled_diff, char** out_residual,
                                 long* out_truncation);

/* The expansion alone; terms must be 2 or 3. */
FIBEULER_API fe_status fe_r_expansion(long n, int z, int digits, int terms,
                                      char** out_decimal);

/* ------------------------------------------------------------------ */
/* Ratio reports                                                       */

typedef struct fe_report fe_report;

/* Exact/estimate ratio at n = stride, 2 stride, ..., n_max. Rows with a
 * zero exact term (z = -1, n = 1) are skipped. */
FIBEULER_API fe_status fe_ratio_table(int z, long n_max, long stride, int digits,
                                      int threads, fe_report** out);
FIBEULER_API long fe_report_rows(const fe_report* rep);
FIBEULER_API fe_status fe_report_row(const fe_report* rep, long i, long* out_n,
                                     double* out_ratio, double* out_log_exact,
                                     double* out_log_asym);
/* CSV with header `n,ratio,log_exact,log_asym`. */
FIBEULER_API fe_status fe_report_write_csv(const fe_report* rep, const char* path);
/* Standalone SVG scatter with a reference line at ratio = 1. */
FIBEULER_API fe_status fe_report_write_svg(const fe_report* rep, const char* path);
FIBEULER_API void fe_report_free(fe_report* rep);

/* ------------------------------------------------------------------ */
/* Catalogue cross-checks                                              */

/* Ensures the b-file for `a_number` ("A" + six digits) is in cache_dir
 * (NULL: $FIBEULER_CACHE_DIR or ~/.cache/fibeuler), fetching it unless
 * offline != 0; returns the cached file's path. */
FIBEULER_API fe_status fe_fetch_bfile(const char* a_number, const char* cache_dir,
                                      int offline, char** out_path);

/* Compares `count` exact terms for shift z against the catalogued b-file
 * (A109509/A166861/A200544/A260787 for z = -1,0,1,2). FE_OK on full
 * agreement; FE_ERR_MISMATCH when terms differ or too few are available.
 * out_summary (optional) receives a one-line human-readable result in
 * both cases. */
FIBEULER_API fe_status fe_cross_check(int z, long count, const char* cache_dir,
                                      int offline, int threads, char** out_summary);

#ifdef __cplusplus
}
#endif

#endif /* FIBEULER_H */
