/*
 * mcfluct: exact microcanonical ground-state number fluctuations of ideal
 * Bose, Fermi and fractional-exclusion gases in a 1D harmonic trap.
 *
 * C interface. All objects are opaque handles created and destroyed through
 * this API. Every fallible call returns an mcf_status; on failure the message
 * for the calling thread is available from mcf_last_error() until the next
 * call on that thread. A context may be shared between threads.
 *
 * Energies are in quanta of the oscillator (hbar omega = 1) above the N-body
 * ground state; x = exp(-1/T) with k_B = 1.
 */
#ifndef MCFLUCT_MCFLUCT_H
#define MCFLUCT_MCFLUCT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MCF_BUILDING_LIBRARY)
#    define MCF_API __declspec(dllexport)
#  else
#    define MCF_API __declspec(dllimport)
#  endif
#else
#  define MCF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcf_status {
  MCF_OK = 0,
  MCF_ERROR_INVALID_ARGUMENT = 1, /* malformed text, null pointer, bad enum */
  MCF_ERROR_RANGE = 2,            /* index outside a table or search bracket */
  MCF_ERROR_DOMAIN = 3,           /* precondition violated (n_ex > N, x >= 1, ...) */
  MCF_ERROR_UNSUPPORTED_STATISTICS = 4,
  MCF_ERROR_RESOURCE = 5,         /* enumeration or memory budget exceeded */
  MCF_ERROR_INTERNAL = 6,         /* an identity check failed: a bug */
  MCF_ERROR_NULL_HANDLE = 7
} mcf_status;

typedef enum mcf_statistics_kind {
  MCF_BOSE = 0,
  MCF_FERMI = 1,
  MCF_FES = 2
} mcf_statistics_kind;

/* g = g_num / g_den, used only when kind == MCF_FES. */
typedef struct mcf_statistics {
  mcf_statistics_kind kind;
  int64_t g_num;
  int64_t g_den;
} mcf_statistics;

typedef struct mcf_ground_state_stats {
  double mean_excited;  /* <N_ex> */
  double second_moment; /* <N_ex^2> */
  double fluctuation;   /* delta N_0 */
} mcf_ground_state_stats;

typedef struct mcf_thermal_point {
  double x;
  double mean_excitation; /* <n> */
  mcf_ground_state_stats ce_stats;
} mcf_thermal_point;

typedef enum mcf_verify_suite {
  MCF_VERIFY_IDENTITIES = 0,
  MCF_VERIFY_ORACLE = 1,
  MCF_VERIFY_FES = 2,
  MCF_VERIFY_ENSEMBLES = 3
} mcf_verify_suite;

typedef struct mcf_context mcf_context;
typedef struct mcf_distribution mcf_distribution;
typedef struct mcf_series mcf_series;
typedef struct mcf_report mcf_report;

#define MCF_DEFAULT_BUDGET 10000000ULL

MCF_API const char* mcf_version(void);
MCF_API const char* mcf_last_error(void);
MCF_API const char* mcf_status_name(mcf_status status);

MCF_API mcf_status mcf_context_create(mcf_context** out);
MCF_API void mcf_context_destroy(mcf_context* ctx);

/* "bose", "fermi" or "fes:p/q" with 0 <= p/q <= 1. */
MCF_API mcf_status mcf_statistics_parse(const char* text, mcf_statistics* out);
/* Writes the canonical text form (NUL-terminated) if it fits in buf_len. */
MCF_API mcf_status mcf_statistics_format(const mcf_statistics* stats, char* buf, size_t buf_len,
                                         size_t* required);

/* Omega(n, N) as a decimal string. *required always receives the length
 * including the terminator; MCF_ERROR_RANGE if buf_len is too small. */
MCF_API mcf_status mcf_canonical_multiplicity(mcf_context* ctx, uint64_t n, uint64_t N, char* buf,
                                              size_t buf_len, size_t* required);

/* omega(n, N_ex, N) for N_ex = 1..N from the closed forms. FES at g outside
 * {0, 1, 1/(N-1), (N-2)/(N-1)} is MCF_ERROR_UNSUPPORTED_STATISTICS. */
MCF_API mcf_status mcf_distribution_create(mcf_context* ctx, uint64_t n, uint64_t N,
                                           const mcf_statistics* stats, mcf_distribution** out);
/* As above, but FES without a closed form falls back to direct enumeration,
 * refusing with MCF_ERROR_RESOURCE when Omega(n, N) exceeds budget. */
MCF_API mcf_status mcf_distribution_resolve(mcf_context* ctx, uint64_t n, uint64_t N,
                                            const mcf_statistics* stats, uint64_t budget,
                                            mcf_distribution** out);
/* Quasiparticle enumeration at any rational g. */
MCF_API mcf_status mcf_enumerate_fes(mcf_context* ctx, uint64_t n, uint64_t N, int64_t g_num,
                                     int64_t g_den, uint64_t budget, mcf_distribution** out);
/* Brute-force partition classification (Bose: parts, Fermi: Durfee side). */
MCF_API mcf_status mcf_oracle_distribution(mcf_context* ctx, uint64_t n, uint64_t N,
                                           const mcf_statistics* stats, uint64_t budget,
                                           mcf_distribution** out);
MCF_API void mcf_distribution_destroy(mcf_distribution* d);
MCF_API size_t mcf_distribution_size(const mcf_distribution* d);
/* Decimal omega for 1 <= n_ex <= size, owned by d; NULL when out of range. */
MCF_API const char* mcf_distribution_omega(const mcf_distribution* d, size_t n_ex);
MCF_API mcf_status mcf_distribution_stats(const mcf_distribution* d, mcf_ground_state_stats* out);

/* Rows n = 0..n_max of (n, <N_ex>, delta N_0). Unsupported FES g is
 * enumerated per row under budget. */
MCF_API mcf_status mcf_fluctuation_sweep(mcf_context* ctx, uint64_t N,
                                         const mcf_statistics* stats, uint64_t n_max,
                                         uint64_t budget, mcf_series** out);
MCF_API void mcf_series_destroy(mcf_series* s);
MCF_API size_t mcf_series_size(const mcf_series* s);
MCF_API mcf_status mcf_series_row(const mcf_series* s, size_t index, uint64_t* n,
                                  double* mean_excited, double* fluctuation);

/* Canonical statistics at x (0 < x < 1) for Bose, Fermi, or FES with a
 * closed form. Shell data is cached in the context per (N, statistics). */
MCF_API mcf_status mcf_ce_stats(mcf_context* ctx, double x, uint64_t N,
                                const mcf_statistics* stats, mcf_thermal_point* out);
/* g var_F + (1 - g) var_B at x; either output pointer may be NULL. */
MCF_API mcf_status mcf_ce_fluctuation_fes(mcf_context* ctx, double x, uint64_t N, int64_t g_num,
                                          int64_t g_den, double* variance, double* fluctuation);
/* x with <n>(x) = target_n to 1e-9 relative. */
MCF_API mcf_status mcf_invert_mean_excitation(mcf_context* ctx, double target_n, uint64_t N,
                                              const mcf_statistics* stats, double* x);

/* Runs a verification suite; the report is returned even when checks fail.
 * *passed is 1 iff every check passed. */
MCF_API mcf_status mcf_verify(mcf_context* ctx, mcf_verify_suite suite, mcf_report** out,
                              int* passed);
MCF_API void mcf_report_destroy(mcf_report* r);
MCF_API size_t mcf_report_size(const mcf_report* r);
/* Strings are owned by r. detail is "" when the check passed. */
MCF_API mcf_status mcf_report_check(const mcf_report* r, size_t index, const char** name,
                                    uint64_t* checked, uint64_t* failed, const char** detail);

#ifdef __cplusplus
}
#endif

#endif /* MCFLUCT_MCFLUCT_H */
