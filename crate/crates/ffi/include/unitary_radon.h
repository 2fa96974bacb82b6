#ifndef UNITARY_RADON_H
#define UNITARY_RADON_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a call. The non-zero values match the command-line exit codes
// where they overlap.
typedef enum UrStatus {
  UR_STATUS_OK = 0,
  UR_STATUS_IO = 1,
  UR_STATUS_CONTRACT = 2,
  UR_STATUS_INVARIANT = 3,
  UR_STATUS_NULL_ARGUMENT = 4,
  UR_STATUS_INVALID_UTF8 = 5,
  UR_STATUS_PANIC = 6,
} UrStatus;

// A polynomial with exact complex rational coefficients.
typedef struct UrPolynomial UrPolynomial;

// Output of [`ur_run`]: the report or tuple text and the exit code the
// command-line tool would have used.
typedef struct UrReport UrReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread; empty after a
// successful call. Valid until the next call on the same thread.
const char *ur_last_error(void);

// Runs a command exactly as the command-line tool does. `argv` holds the
// arguments after the program name. When `document` is non-null it is used
// as the input instead of `--in`. A report is produced for
// [`UrStatus::Ok`] and [`UrStatus::Invariant`].
//
// # Safety
// `argv` must point to `argc` valid C strings; `document` is null or a valid
// C string; `out` must be writable.
enum UrStatus ur_run(const char *const *argv,
                     size_t argc,
                     const char *document,
                     struct UrReport **out);

// Report text, owned by the report.
//
// # Safety
// `report` must come from [`ur_run`] and not yet be freed.
const char *ur_report_text(const struct UrReport *report);

// Exit code the command-line tool would have returned, or -1 for null.
//
// # Safety
// `report` must come from [`ur_run`] and not yet be freed.
int32_t ur_report_exit_code(const struct UrReport *report);

// # Safety
// `report` is null or came from [`ur_run`]; it must not be used afterwards.
void ur_report_free(struct UrReport *report);

// Parses a polynomial document.
//
// # Safety
// `json` must be a valid C string and `out` writable.
enum UrStatus ur_polynomial_parse(const char *json, struct UrPolynomial **out);

// Serializes a polynomial; free the string with [`ur_string_free`].
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum UrStatus ur_polynomial_to_json(const struct UrPolynomial *poly, char **out);

// Number of complex variables, or 0 for null.
//
// # Safety
// `poly` is null or a live handle.
size_t ur_polynomial_dimension(const struct UrPolynomial *poly);

// # Safety
// `poly` is null or a live handle; it must not be used afterwards.
void ur_polynomial_free(struct UrPolynomial *poly);

// # Safety
// `s` is null or a string returned by this library.
void ur_string_free(char *s);

// Exact dual transform of a harmonic polynomial on the unit ball.
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum UrStatus ur_ball_dual(const struct UrPolynomial *poly, struct UrPolynomial **out);

// Recovers a holomorphic polynomial from its dual transform.
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum UrStatus ur_ball_invert_holomorphic(const struct UrPolynomial *poly,
                                         struct UrPolynomial **out);

// Runs the two-branch inversion pipeline on a harmonic polynomial; the
// result equals the input.
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum UrStatus ur_ball_reconstruct(const struct UrPolynomial *poly, struct UrPolynomial **out);

// Exact dual transform in Fock space; the input must be holomorphic.
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum UrStatus ur_fock_dual(const struct UrPolynomial *poly, struct UrPolynomial **out);

// Inverse of [`ur_fock_dual`].
//
// # Safety
// `poly` must be a live handle and `out` writable.
enum UrStatus ur_fock_invert(const struct UrPolynomial *poly, struct UrPolynomial **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNITARY_RADON_H */
