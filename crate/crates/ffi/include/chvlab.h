#ifndef CHVLAB_H
#define CHVLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChvStatus {
  CHV_STATUS_OK = 0,
  CHV_STATUS_NULL_POINTER = 1,
  CHV_STATUS_INVALID_UTF8 = 2,
  CHV_STATUS_PARSE = 3,
  CHV_STATUS_DIMENSION = 4,
  CHV_STATUS_HYPOTHESIS = 5,
  CHV_STATUS_INVALID_ARGUMENT = 6,
  CHV_STATUS_PANIC = 7,
} ChvStatus;

typedef enum ChvReportStatus {
  CHV_REPORT_STATUS_PASS = 0,
  CHV_REPORT_STATUS_FAIL = 1,
  CHV_REPORT_STATUS_HYPOTHESIS_VIOLATION = 3,
} ChvReportStatus;

typedef struct ChvFamily ChvFamily;

typedef struct ChvMatrix ChvMatrix;

typedef struct ChvMixedFamily ChvMixedFamily;

typedef struct ChvReport ChvReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Free with
// [`chv_string_free`].
char *chv_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void chv_string_free(char *s);

// Library version; static storage, do not free.
const char *chv_version(void);

// Parses `{"n": .., "entries": [[..]]}`.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum ChvStatus chv_matrix_from_json(const char *json, struct ChvMatrix **out);

// # Safety
// `m` must be NULL or a live handle from this library.
void chv_matrix_free(struct ChvMatrix *m);

// # Safety
// `m` must be a live handle; `out` must be writable.
enum ChvStatus chv_matrix_to_json(const struct ChvMatrix *m, char **out);

// Determinant as canonical polynomial text.
//
// # Safety
// `m` must be a live handle; `out` must be writable.
enum ChvStatus chv_matrix_det(const struct ChvMatrix *m, char **out);

// # Safety
// `m` must be a live handle; `out` must be writable.
enum ChvStatus chv_matrix_permanent(const struct ChvMatrix *m, char **out);

// Mixed discriminant of a tuple file `{"n": .., "mats": [..]}`.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum ChvStatus chv_mixed_discriminant(const char *json, char **out);

// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum ChvStatus chv_family_from_json(const char *json, struct ChvFamily **out);

// A constrained family over a commuting family drawn by `strategy`
// (`"diagonal-generic"`, `"powers-of-one"`, `"circulant"`, `"conjugated-diagonal"`).
//
// # Safety
// `strategy` must be a NUL-terminated string; `out` must be writable.
enum ChvStatus chv_family_generate(const char *strategy,
                                   size_t n,
                                   size_t k,
                                   uint64_t seed,
                                   bool symbolic,
                                   uint32_t magnitude,
                                   struct ChvFamily **out);

// # Safety
// `f` must be a live handle; `out` must be writable.
enum ChvStatus chv_family_to_json(const struct ChvFamily *f, char **out);

// # Safety
// `f` must be NULL or a live handle from this library.
void chv_family_free(struct ChvFamily *f);

// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum ChvStatus chv_mixed_family_from_json(const char *json, struct ChvMixedFamily **out);

// # Safety
// `strategy` must be a NUL-terminated string; `out` must be writable.
enum ChvStatus chv_mixed_family_generate(const char *strategy,
                                         size_t n,
                                         size_t k,
                                         uint64_t seed,
                                         bool symbolic,
                                         uint32_t magnitude,
                                         struct ChvMixedFamily **out);

// # Safety
// `f` must be NULL or a live handle from this library.
void chv_mixed_family_free(struct ChvMixedFamily *f);

// # Safety
// `f` must be a live handle; `out` must be writable.
enum ChvStatus chv_verify_phillips(const struct ChvFamily *f, struct ChvReport **out);

// `b` and `e` are 1-based.
//
// # Safety
// `f` must be a live handle; `out` must be writable.
enum ChvStatus chv_verify_lemmas(const struct ChvFamily *f,
                                 size_t b,
                                 size_t e,
                                 struct ChvReport **out);

// # Safety
// `f` must be a live handle; `out` must be writable.
enum ChvStatus chv_verify_mixed(const struct ChvMixedFamily *f, struct ChvReport **out);

// # Safety
// `r` must be a live handle; `out` must be writable.
enum ChvStatus chv_report_status(const struct ChvReport *r, enum ChvReportStatus *out);

// # Safety
// `r` must be a live handle; `out` must be writable.
enum ChvStatus chv_report_to_json(const struct ChvReport *r, char **out);

// # Safety
// `r` must be NULL or a live handle from this library.
void chv_report_free(struct ChvReport *r);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHVLAB_H */
