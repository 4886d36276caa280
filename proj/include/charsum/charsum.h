/* C interface to the charsum library.
 *
 * Field elements cross the boundary as packed integers: an element
 * c0 + c1 x + ... + c_{m-1} x^{m-1} of F_{p^m} is sum c_i p^i. Characters are
 * named by their index k, meaning chi(g^n) = exp(2 pi i k n / (q - 1)) for the
 * field's fixed generator g. Every function returning charsum_status leaves a
 * message for charsum_last_error() on failure.
 */
#ifndef CHARSUM_CHARSUM_H
#define CHARSUM_CHARSUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CHARSUM_API __declspec(dllexport)
#else
#define CHARSUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum charsum_status {
  CHARSUM_OK = 0,
  CHARSUM_ERR_INVALID_ARGUMENT = 1,
  CHARSUM_ERR_NOT_PRIME = 2,
  CHARSUM_ERR_EVEN_CHARACTERISTIC = 3,
  CHARSUM_ERR_TOO_LARGE = 4,
  CHARSUM_ERR_UNSUPPORTED = 5,
  CHARSUM_ERR_FIELD_MISMATCH = 6,
  CHARSUM_ERR_PARSE = 7,
  CHARSUM_ERR_IO = 8,
  CHARSUM_ERR_CORRUPT = 9,
  CHARSUM_ERR_INTERNAL = 10
} charsum_status;

/* Which field of the tower F_q < F_{q^2} an argument refers to. */
typedef enum charsum_level { CHARSUM_BASE = 0, CHARSUM_TOP = 1 } charsum_level;

typedef struct charsum_complex {
  double re;
  double im;
} charsum_complex;

typedef struct charsum_tower charsum_tower;
typedef struct charsum_katz charsum_katz;
typedef struct charsum_config charsum_config;
typedef struct charsum_result charsum_result;

CHARSUM_API const char* charsum_version(void);
CHARSUM_API const char* charsum_status_string(charsum_status status);
/* Message of the last failed call on this thread; "" if none. */
CHARSUM_API const char* charsum_last_error(void);
/* Process exit code a command line tool should use for a failed call (2..5). */
CHARSUM_API int charsum_status_exit_code(charsum_status status);

/* ---- fields ---- */

/* Parses "27" or "3^3" into p and t; rejects p = 2 and non prime powers. */
CHARSUM_API charsum_status charsum_parse_field(const char* text, uint32_t* p, uint32_t* t);

/* Builds F_q < F_{q^2} for q = p^t, p an odd prime. */
CHARSUM_API charsum_status charsum_tower_create(uint32_t p, uint32_t t, charsum_tower** out);
CHARSUM_API void charsum_tower_destroy(charsum_tower* tower);
CHARSUM_API uint64_t charsum_tower_q(const charsum_tower* tower);
CHARSUM_API uint32_t charsum_tower_p(const charsum_tower* tower);
/* Generator of F_q^* (the norm of the F_{q^2} generator) or of F_{q^2}^*. */
CHARSUM_API uint32_t charsum_tower_generator(const charsum_tower* tower, charsum_level level);
CHARSUM_API charsum_status charsum_tower_log(const charsum_tower* tower, charsum_level level, uint32_t x,
                                             uint64_t* out);
CHARSUM_API charsum_status charsum_tower_exp(const charsum_tower* tower, charsum_level level, uint64_t k,
                                             uint32_t* out);
/* Relative norm F_{q^2} -> F_q. */
CHARSUM_API charsum_status charsum_tower_norm(const charsum_tower* tower, uint32_t z, uint32_t* out);

/* ---- classical sums (memoized per tower) ---- */

CHARSUM_API charsum_status charsum_gauss(const charsum_tower* tower, charsum_level level, uint64_t chi,
                                         charsum_complex* out);
CHARSUM_API charsum_status charsum_jacobi(const charsum_tower* tower, charsum_level level, uint64_t a, uint64_t b,
                                          charsum_complex* out);
/* 2F1(A, B; C | x) over F_q. */
CHARSUM_API charsum_status charsum_hyp2f1(const charsum_tower* tower, uint64_t a, uint64_t b, uint64_t c, uint32_t x,
                                          charsum_complex* out);
/* Computes the full Gauss table of one level and writes it as CSV. */
CHARSUM_API charsum_status charsum_gauss_table_save(const charsum_tower* tower, charsum_level level,
                                                    const char* path);
/* Loads a CSV table into the tower's memo after validating it. */
CHARSUM_API charsum_status charsum_gauss_table_load(const charsum_tower* tower, charsum_level level,
                                                    const char* path, size_t* rows);

/* ---- mixed sums (q = 3 mod 4) ---- */

/* octic selects M8 = the character of index octic * (q^2 - 1) / 8; octic in {1, 3, 5, 7}. */
CHARSUM_API charsum_status charsum_katz_create(const charsum_tower* tower, uint32_t a, unsigned octic,
                                               charsum_katz** out);
CHARSUM_API void charsum_katz_destroy(charsum_katz* ctx);
CHARSUM_API charsum_status charsum_katz_tau(const charsum_katz* ctx, charsum_complex* out);
CHARSUM_API charsum_status charsum_katz_P(const charsum_katz* ctx, uint32_t j, uint32_t k, charsum_complex* out);
CHARSUM_API charsum_status charsum_katz_V(const charsum_katz* ctx, uint32_t j, charsum_complex* out);
CHARSUM_API charsum_status charsum_katz_mellin_S(const charsum_katz* ctx, uint64_t chi, charsum_complex* out);

/* ---- verification runs ---- */

CHARSUM_API charsum_status charsum_config_create(charsum_config** out);
CHARSUM_API void charsum_config_destroy(charsum_config* config);
/* Same keys as the config file format. */
CHARSUM_API charsum_status charsum_config_set(charsum_config* config, const char* key, const char* value);
CHARSUM_API charsum_status charsum_config_load_file(charsum_config* config, const char* path);
CHARSUM_API charsum_status charsum_config_load_text(charsum_config* config, const char* text);

/* Runs the configured suites. A result is produced whenever the call
 * returns CHARSUM_OK, including runs with failing checks or invalid configs;
 * inspect charsum_result_exit_code. */
CHARSUM_API charsum_status charsum_run(const charsum_config* config, charsum_result** out);
CHARSUM_API void charsum_result_destroy(charsum_result* result);

/* 0 all checks passed, 1 check failures, 2 config error, 3 field construction,
 * 4 I/O or cache error, 5 internal error. */
CHARSUM_API int charsum_result_exit_code(const charsum_result* result);
CHARSUM_API const char* charsum_result_error(const charsum_result* result);
CHARSUM_API size_t charsum_result_total_checks(const charsum_result* result);
CHARSUM_API size_t charsum_result_failed_checks(const charsum_result* result);
CHARSUM_API double charsum_result_max_deviation(const charsum_result* result);
CHARSUM_API double charsum_result_wall_seconds(const charsum_result* result);
/* Full JSON report; the string lives as long as the result. */
CHARSUM_API const char* charsum_result_json(const charsum_result* result);

typedef struct charsum_report_summary {
  const char* suite; /* owned by the result */
  uint64_t q;
  int64_t a_index; /* -1 when the suite does not depend on a */
  unsigned octic;
  size_t checks;
  size_t failed;
  double max_deviation;
  double wall_seconds;
} charsum_report_summary;

CHARSUM_API size_t charsum_result_report_count(const charsum_result* result);
CHARSUM_API charsum_status charsum_result_report(const charsum_result* result, size_t index,
                                                 charsum_report_summary* out);

#ifdef __cplusplus
}
#endif

#endif
