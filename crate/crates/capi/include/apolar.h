#ifndef APOLAR_H
#define APOLAR_H

/* This file is generated by cbindgen from the apolar-capi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible entry point.
typedef enum ApolarStatus {
  // The call succeeded.
  APOLAR_STATUS_OK = 0,
  // A required pointer argument was null.
  APOLAR_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  APOLAR_STATUS_INVALID_UTF8 = 2,
  // The input was rejected; `apolar_last_error` has the reason.
  APOLAR_STATUS_INVALID_INPUT = 3,
  // An internal panic was caught; `apolar_last_error` has the report.
  APOLAR_STATUS_PANIC = 4,
} ApolarStatus;

// Opaque analysis handle. Create with [`apolar_analyze_dual`] or
// [`apolar_analyze_ideal`], release with [`apolar_analysis_free`].
typedef struct ApolarAnalysis ApolarAnalysis;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Returns the message behind the most recent failure on this thread, or
// null if the last call succeeded. The pointer is only valid until the
// next library call on the same thread; do not free it.
const char *apolar_last_error(void);

// Analyzes the Artinian Gorenstein algebra of a dual generator.
//
// `text` is an uppercase-alphabet homogeneous form such as
// `"X1*X2*X3*X4^2"`. Pass `n = 0` to infer the number of variables from
// the highest index that occurs. `seed`, `trials`, and `coeff_bound`
// control the randomized Lefschetz probe; `trials` must be positive.
// On success `*out` owns the new handle.
//
// # Safety
//
// `text` must be null or point to a NUL-terminated string, and `out`
// must point to writable memory for one pointer.
enum ApolarStatus apolar_analyze_dual(const char *text,
                                      size_t n,
                                      uint64_t seed,
                                      size_t trials,
                                      int64_t coeff_bound,
                                      struct ApolarAnalysis **out);

// Analyzes the socle-degree `socle` Gorenstein quotient cut out by a
// comma-separated list of lowercase-alphabet generators, such as
// `"x1^2, x2^2, x3*x4, x3^3-x4^3"`.
//
// Pass `n = 0` to infer the number of variables. The ideal must have a
// one-dimensional inverse system in degree `socle`; anything else is
// rejected with `APOLAR_STATUS_INVALID_INPUT`.
//
// # Safety
//
// `text` must be null or point to a NUL-terminated string, and `out`
// must point to writable memory for one pointer.
enum ApolarStatus apolar_analyze_ideal(const char *text,
                                       size_t socle,
                                       size_t n,
                                       uint64_t seed,
                                       size_t trials,
                                       int64_t coeff_bound,
                                       struct ApolarAnalysis **out);

// Releases a handle returned by an analyze call. Null is ignored.
//
// # Safety
//
// `analysis` must be null or a pointer previously returned by this
// library that has not been freed yet.
void apolar_analysis_free(struct ApolarAnalysis *analysis);

// Number of variables of the polynomial ring, or 0 if `analysis` is null.
//
// # Safety
//
// `analysis` must be null or a live handle from this library.
size_t apolar_analysis_nvars(const struct ApolarAnalysis *analysis);

// Socle degree of the algebra, or 0 if `analysis` is null.
//
// # Safety
//
// `analysis` must be null or a live handle from this library.
size_t apolar_analysis_socle_degree(const struct ApolarAnalysis *analysis);

// Copies the Hilbert function into `values` (at most `capacity`
// entries) and returns its full length, which is the socle degree plus
// one. Call once with `capacity = 0` to size the buffer. Returns 0 if
// `analysis` is null.
//
// # Safety
//
// `analysis` must be null or a live handle, and `values` must point to
// at least `capacity` writable entries whenever `capacity > 0`.
size_t apolar_analysis_hilbert(const struct ApolarAnalysis *analysis,
                               size_t *values,
                               size_t capacity);

// Whether a weak Lefschetz witness was found: 1 yes, 0 no, -1 if
// `analysis` is null. A 0 is probabilistic evidence only.
//
// # Safety
//
// `analysis` must be null or a live handle from this library.
int apolar_analysis_has_wlp(const struct ApolarAnalysis *analysis);

// Whether the strong Lefschetz property holds, by the exact Hessian
// certificate: 1 yes, 0 no, -1 if `analysis` is null.
//
// # Safety
//
// `analysis` must be null or a live handle from this library.
int apolar_analysis_has_slp(const struct ApolarAnalysis *analysis);

// The full analysis report as pretty-printed JSON. Free the returned
// string with [`apolar_string_free`]; returns null if `analysis` is
// null.
//
// # Safety
//
// `analysis` must be null or a live handle from this library.
char *apolar_analysis_report_json(const struct ApolarAnalysis *analysis);

// The analysis report rendered as human-readable text. Free the
// returned string with [`apolar_string_free`]; returns null if
// `analysis` is null.
//
// # Safety
//
// `analysis` must be null or a live handle from this library.
char *apolar_analysis_report_text(const struct ApolarAnalysis *analysis);

// The graded Betti table as JSON (`{"n", "s", "entries": [[i, j, b]]}`).
// Free the returned string with [`apolar_string_free`]; returns null if
// `analysis` is null.
//
// # Safety
//
// `analysis` must be null or a live handle from this library.
char *apolar_analysis_betti_json(const struct ApolarAnalysis *analysis);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
//
// `text` must be null or a string pointer previously returned by this
// library that has not been freed yet.
void apolar_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* APOLAR_H */
