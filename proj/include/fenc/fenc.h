/* Copyright 2026 The fenc Authors
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

/* C interface to libfenc.
 *
 * Every call returns a fenc_status.  On failure a description is available
 * from fenc_last_error() on the same thread until the next call.  Strings and
 * arrays handed out by the library are owned by the caller and released with
 * fenc_string_free / fenc_doubles_free.
 */

#ifndef FENC_FENC_H
#define FENC_FENC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(FENC_BUILDING_LIBRARY)
#    define FENC_API __declspec(dllexport)
#  else
#    define FENC_API __declspec(dllimport)
#  endif
#else
#  define FENC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fenc_status {
    FENC_OK = 0,
    FENC_ERR_ARGUMENT = 1,   /* bad parameter or null pointer */
    FENC_ERR_UNSUPPORTED = 2,
    FENC_ERR_IO = 3,         /* missing or unwritable file */
    FENC_ERR_PARSE = 4,      /* malformed document or Pauli text */
    FENC_ERR_VALIDATION = 5, /* document violates encoding invariants */
    FENC_ERR_BUILD = 6,      /* construction or certification failed */
    FENC_ERR_BUDGET = 7,     /* refused: estimated work over budget */
    FENC_ERR_SIZE = 8,       /* instance too large for the requested method */
    FENC_ERR_COMPILE = 9,
    FENC_ERR_INTERNAL = 10
} fenc_status;

typedef enum fenc_format {
    FENC_FORMAT_JSON = 0,
    FENC_FORMAT_TEXT = 1,
    FENC_FORMAT_CSV = 2,
    FENC_FORMAT_CHECKMATRIX = 3,
    FENC_FORMAT_SVG = 4
} fenc_format;

typedef struct fenc_encoding fenc_encoding;

FENC_API const char *fenc_version(void);
FENC_API const char *fenc_last_error(void);
FENC_API const char *fenc_status_name(fenc_status s);
FENC_API void fenc_string_free(char *s);
FENC_API void fenc_doubles_free(double *v);

/* ---- encodings ---------------------------------------------------------- */

typedef struct fenc_build_params {
    const char *family; /* jwt, le1d, le2d, snake, vc, hx, dk, pe */
    int d;
    int modes;          /* 1D families */
    int rows, cols;     /* 2D families */
    int spinful;
    int simplified;
} fenc_build_params;

FENC_API fenc_status fenc_build(const fenc_build_params *params, fenc_encoding **out);
FENC_API fenc_status fenc_load(const char *path, fenc_encoding **out);
FENC_API fenc_status fenc_from_json(const char *text, fenc_encoding **out);
FENC_API fenc_status fenc_save(const fenc_encoding *enc, const char *path);
FENC_API void fenc_encoding_free(fenc_encoding *enc);

/* Writes to a temporary file beside path, then renames it into place. */
FENC_API fenc_status fenc_write_file(const char *path, const char *data);

FENC_API size_t fenc_num_qubits(const fenc_encoding *enc);
FENC_API size_t fenc_num_modes(const fenc_encoding *enc);
FENC_API size_t fenc_num_stabilizers(const fenc_encoding *enc);
FENC_API int fenc_claimed_distance(const fenc_encoding *enc);

/* JSON, TEXT (grid diagram), SVG, or CHECKMATRIX (stabilizers). */
FENC_API fenc_status fenc_export(const fenc_encoding *enc, fenc_format fmt, char **out);

/* ---- verification ------------------------------------------------------- */

/* Algebra and logical-count checks; *report lists every violation. */
FENC_API fenc_status fenc_check(const fenc_encoding *enc, int *algebra_ok, int *counts_ok, char **report);

typedef struct fenc_distance_params {
    size_t max_weight;
    double budget;      /* work units; <= 0 selects the default */
    unsigned threads;
} fenc_distance_params;

typedef struct fenc_distance_result {
    size_t certified_floor; /* no logical below this weight */
    int has_witness;
    size_t witness_weight;
    char *witness;          /* Pauli text or NULL; free with fenc_string_free */
    char *method;
    double estimated_work;
} fenc_distance_result;

/* FENC_ERR_BUDGET leaves result->estimated_work filled in. */
FENC_API fenc_status fenc_distance(const fenc_encoding *enc, const fenc_distance_params *params,
                                   fenc_distance_result *result);
FENC_API void fenc_distance_result_clear(fenc_distance_result *result);

/* TEXT or CSV. */
FENC_API fenc_status fenc_weight_report(const fenc_encoding *enc, int minimize_effort, fenc_format fmt,
                                        char **out);
FENC_API fenc_status fenc_ratio_report(const char *family, int d_lo, int d_hi, fenc_format fmt, char **out);

/* ---- Fermi-Hubbard ------------------------------------------------------ */

/* "coeff<TAB>Pauli" lines for the encoding's Fermi-Hubbard Hamiltonian. */
FENC_API fenc_status fenc_compile_fhm(const fenc_encoding *enc, double t, double u, char **out);

/* Sorted code-space eigenvalues of the compiled Hamiltonian. */
FENC_API fenc_status fenc_spectrum(const fenc_encoding *enc, double t, double u, double **values, size_t *count);

/* Sorted Fock-space eigenvalues of the same fermionic Hamiltonian. */
FENC_API fenc_status fenc_oracle_spectrum(const fenc_encoding *enc, double t, double u, double **values,
                                          size_t *count);

/* ---- error mitigation --------------------------------------------------- */

/* Scan d_lo..d_hi of le1d vertex ("V") or transfer ("T") rotations.
 * *csv gets the table, *verdict the pass/fail line, *pass 1 or 0. */
FENC_API fenc_status fenc_qem_scan(int d_lo, int d_hi, const char *kind, unsigned threads, char **csv,
                                   char **verdict, int *pass);

FENC_API fenc_status fenc_qem_injection(int d, const char *kind, int *pass, char **report);

#ifdef __cplusplus
}
#endif

#endif /* FENC_FENC_H */
