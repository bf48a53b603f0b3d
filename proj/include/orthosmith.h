#ifndef ORTHOSMITH_H
#define ORTHOSMITH_H

/*
 * C surface of the orthosmith library.
 *
 * All functions return a status code; payloads come back as heap-allocated
 * UTF-8 strings (JSON, JSON-lines or CSV) that the caller releases with
 * os_string_free.  Matrices are opaque handles.  On failure the functions
 * leave outputs untouched and a diagnostic is available from os_last_error
 * until the next call on the same thread.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum os_status {
    OS_OK = 0,
    OS_ERR_VALIDATION = 1, /* malformed or contradictory input */
    OS_ERR_DOMAIN = 2      /* valid input outside a size/domain guard */
} os_status;

/* Opaque exact matrix over Z, Q or Z[i]. */
typedef struct os_matrix os_matrix;

const char* os_last_error(void);

void os_string_free(char* s);
void os_matrix_free(os_matrix* m);

/* Shared file format: {"n": int, "ring": "Z"|"Q"|"Zi", "entries": [[...]]};
 * rational entries are "p/q" strings, Gaussian entries [re, im] pairs. */
os_status os_matrix_from_json(const char* text, os_matrix** out);
os_status os_matrix_to_json(const os_matrix* m, char** json_out);

/* Smith normal form: invariant factors, determinantal ideal generators and
 * the unimodular witnesses U, V with U*G*V = diag(d). */
os_status os_snf(const os_matrix* m, char** json_out);

/* Exact conjugation-integrality probability with per-factor breakdown.
 * ring:     NULL (as stored) or "Z" / "Zi" to reinterpret the matrix;
 * ensemble: NULL -> "symmetric", or "symmetric" / "asymmetric" / "hermitian";
 * modulus:  decimal string, or NULL for level^2 of an orthogonal input. */
os_status os_prob(const os_matrix* m, const char* ring, const char* ensemble,
                  const char* modulus, char** json_out);

/* All rational orthogonal matrices of level exactly `level`, one JSON
 * matrix per line in the shared format. */
os_status os_enum_o2(int64_t level, char** jsonl_out);
os_status os_enum_o3(int64_t level, char** jsonl_out);

/* Closed-form E[N_n(level)] for n = 2 or 3, level >= 2. */
os_status os_expect(int n, int64_t level, char** json_out);

/* The two limiting bound constants 12G/pi^2 - 1 and 105 zeta(3)/pi^4 - 1. */
os_status os_bounds(char** json_out);

/* CSV with columns level,expectation_num,expectation_den,expectation_float
 * for every level in [2, max_level] with nonzero expectation. */
os_status os_figure_csv(int n, int64_t max_level, char** csv_out);

/* Exhaustive conjugation count over the full residue ensemble.
 * ensemble: NULL -> "symmetric"; over Z also "asymmetric", over Z[i] also
 * "hermitian".  modulus: decimal string, or NULL for level^2 of an
 * orthogonal input. */
os_status os_verify_exhaustive(const os_matrix* m, const char* modulus, const char* ensemble,
                               int threads, char** json_out);

/* Monte Carlo estimate for a rational orthogonal matrix; entries uniform on
 * {1..k} (k rounded up to a multiple of level^2; NULL -> 1000 * level^2).
 * ring: NULL / "Z" for integer entries, "Zi" for Gaussian entries. */
os_status os_verify_mc(const os_matrix* m, uint64_t samples, uint64_t seed, const char* k,
                       const char* ring, int threads, char** json_out);

/* Empirical distribution of N_n(level): per sample, how many enumerated
 * level-`level` orthogonal matrices preserve integrality. */
os_status os_verify_sample_n(int n, int64_t level, uint64_t samples, uint64_t seed,
                             const char* k, int threads, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* ORTHOSMITH_H */
